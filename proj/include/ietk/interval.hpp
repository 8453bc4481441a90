#pragma once

#include <gmpxx.h>

#include <string>

namespace ietk {

// Closed rational interval [lo, hi].
struct Interval {
  mpq_class lo;
  mpq_class hi;

  Interval() = default;
  Interval(const mpq_class& l, const mpq_class& h);
  static Interval point(const mpq_class& q) { return Interval(q, q); }

  bool is_point() const { return lo == hi; }
  bool contains(const mpq_class& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
  mpq_class width() const { return hi - lo; }
  mpq_class mid() const { return (lo + hi) / 2; }
  mpq_class mag() const;  // max |x| over the interval
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // throws if b contains 0

Interval intersect(const Interval& a, const Interval& b);  // throws if empty
Interval hull(const Interval& a, const Interval& b);

// Dyadic rounding at absolute precision 2^-bits.
mpq_class floor_dyadic(const mpq_class& q, int bits);
mpq_class ceil_dyadic(const mpq_class& q, int bits);
Interval round_outward(const Interval& x, int bits);

// Enclosure of sqrt over a nonnegative interval with endpoints at 2^-bits.
Interval sqrt_enclosure(const Interval& x, int bits);

// Floor of log2 of |q| for q != 0; used for guard-bit estimates.
long ilog2(const mpq_class& q);

std::string to_decimal(const mpq_class& q, int digits);

}  // namespace ietk
