#pragma once

#include <functional>
#include <memory>
#include <string>

#include "ietk/interval.hpp"

namespace ietk {

inline constexpr int kDefaultMaxBits = 4096;

// A real number known through nested rational enclosures. The generator, when
// present, returns an enclosure of width O(2^-bits) for any requested bits.
class CertifiedReal {
 public:
  using Generator = std::function<Interval(int bits)>;

  CertifiedReal() : enc_(Interval::point(0)) {}
  CertifiedReal(const mpq_class& q) : enc_(Interval::point(q)) {}  // NOLINT implicit
  CertifiedReal(long v) : enc_(Interval::point(mpq_class(v))) {}    // NOLINT implicit

  static CertifiedReal from_generator(Generator g, int bits = 64);
  static CertifiedReal parse(const std::string& text);  // "p/q", integer, or decimal

  const Interval& enclosure() const { return enc_; }
  const mpq_class& lo() const { return enc_.lo; }
  const mpq_class& hi() const { return enc_.hi; }
  int bits() const { return bits_; }
  bool is_exact() const { return !gen_; }
  const mpq_class& exact_value() const;  // throws unless is_exact()

  // Enclosure tightened to about 2^-bits; never wider than the current one.
  CertifiedReal refined(int bits) const;
  Interval at(int bits) const { return refined(bits).enc_; }

  double approx() const { return enc_.mid().get_d(); }
  std::string to_decimal(int digits) const;

  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal sqrt(const CertifiedReal& x);

 private:
  Interval enc_;
  std::shared_ptr<const Generator> gen_;
  int bits_ = 0;
};

enum class Ordering { Less, Greater, Equal, Ambiguous };

const char* to_string(Ordering o);

// Equal is returned only when both values are exact and identical; otherwise
// enclosures are refined by precision doubling up to max_bits.
Ordering compare(const CertifiedReal& x, const CertifiedReal& y, int max_bits = kDefaultMaxBits);

// Sign of x: -1, 0 (only for exact zero), +1; throws AmbiguousComparison.
int certified_sign(const CertifiedReal& x, int max_bits = kDefaultMaxBits);

}  // namespace ietk
