#pragma once

#include <stdexcept>
#include <string>

namespace ietk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbiguousComparison : Error { using Error::Error; };
struct AmbiguousInterval : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct BadSize : Error { using Error::Error; };
struct NoFixedSeed : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
struct PathNotRealizable : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };
struct NonPositiveEntry : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

// Class name of an ietk error, "Error" for anything else.
const char* error_kind(const std::exception& e);

}  // namespace ietk
