#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ietk/int_matrix.hpp"
#include "ietk/interval.hpp"

namespace ietk {

// Dense integer polynomial, coefficient i multiplies x^i. Always trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly from_high(std::initializer_list<long> high_to_low);
  static IntPoly x_minus(const mpz_class& a);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const mpz_class& coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& lead() const { return c_.back(); }
  mpz_class content() const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  Interval eval(const Interval& x) const;
  IntPoly derivative() const;

  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Exact division; returns false if b does not divide a over Z.
bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& q);

// det(xI - A) by fraction-free elimination over Z[x].
IntPoly char_poly(const IntMatrix& a);

// Irreducible factors over Q (primitive integer polynomials, positive leading
// coefficient), with multiplicity, ordered by degree then coefficients. A
// constant factor is prepended when needed so the product equals p exactly.
std::vector<IntPoly> factor_int_poly(const IntPoly& p);

inline constexpr int kMaxFactorDegree = 12;

}  // namespace ietk
