#include "ietk/errors.hpp"

namespace ietk {

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const AmbiguousComparison*>(&e)) return "AmbiguousComparison";
  if (dynamic_cast<const AmbiguousInterval*>(&e)) return "AmbiguousInterval";
  if (dynamic_cast<const OutOfDomain*>(&e)) return "OutOfDomain";
  if (dynamic_cast<const NotPrimitive*>(&e)) return "NotPrimitive";
  if (dynamic_cast<const DegreeTooLarge*>(&e)) return "DegreeTooLarge";
  if (dynamic_cast<const BadSize*>(&e)) return "BadSize";
  if (dynamic_cast<const NoFixedSeed*>(&e)) return "NoFixedSeed";
  if (dynamic_cast<const NotFound*>(&e)) return "NotFound";
  if (dynamic_cast<const PathNotRealizable*>(&e)) return "PathNotRealizable";
  if (dynamic_cast<const SearchExhausted*>(&e)) return "SearchExhausted";
  if (dynamic_cast<const NonPositiveEntry*>(&e)) return "NonPositiveEntry";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  return "Error";
}

}  // namespace ietk
