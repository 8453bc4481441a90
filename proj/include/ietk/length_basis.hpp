#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ietk/certified_real.hpp"
#include "ietk/int_matrix.hpp"
#include "ietk/rational_linalg.hpp"

namespace ietk {

// (coef . basis) / den with integer coefficients and positive denominator,
// kept in lowest terms.
struct LinearForm {
  IntVector coef;
  std::int64_t den = 1;

  LinearForm() = default;
  explicit LinearForm(IntVector c, std::int64_t d = 1);
  static LinearForm zero(std::size_t dim) { return LinearForm(IntVector(dim, 0)); }
  static LinearForm unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coef.size(); }
  bool is_zero() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
  friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator-(const LinearForm& a);
  friend LinearForm operator*(std::int64_t k, const LinearForm& a);
  LinearForm divided(std::int64_t k) const;
};

// Forms summed with integer weights: sum_i w_i f_i.
LinearForm combine(const IntVector& w, const std::vector<LinearForm>& f);

enum class Sign { Negative, Zero, Positive, Unknown };

struct FastEnclosure {
  double val;
  double err;
};

// The reals in which all lengths of an IET family are expressed, plus any
// known integer relations among them (used to decide exact equality).
class LengthBasis {
 public:
  explicit LengthBasis(std::vector<CertifiedReal> values, std::vector<IntVector> relations = {},
                       int max_bits = kDefaultMaxBits);

  std::size_t dim() const { return values_.size(); }
  const CertifiedReal& value(std::size_t i) const { return values_[i]; }
  const std::vector<CertifiedReal>& values() const { return values_; }
  const std::vector<IntVector>& relations() const { return relations_; }
  bool all_exact() const { return all_exact_; }
  int max_bits() const { return max_bits_; }
  const std::vector<double>& mid() const { return mid_; }
  const std::vector<double>& rad() const { return rad_; }

  Interval enclose(const LinearForm& f, int bits) const;
  CertifiedReal to_real(const LinearForm& f) const;
  FastEnclosure fast(const LinearForm& f) const;
  void fast_batch(const std::vector<LinearForm>& forms, std::vector<FastEnclosure>& out) const;

  // Zero only when proved (identical value via relations or exact rationals).
  Sign sign(const LinearForm& f) const;
  bool provably_zero(const LinearForm& f) const;

 private:
  const std::vector<Interval>& enclosures(int bits) const;

  std::vector<CertifiedReal> values_;
  std::vector<IntVector> relations_;
  RowSpan relation_span_;
  bool all_exact_ = true;
  int max_bits_;
  std::vector<double> mid_, rad_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Interval>> cache_;
};

using BasisPtr = std::shared_ptr<const LengthBasis>;

// Throws AmbiguousComparison unless the sign is determined.
int definite_sign(const LengthBasis& b, const LinearForm& f);

}  // namespace ietk
