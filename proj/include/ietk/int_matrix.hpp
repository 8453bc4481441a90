#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ietk {

using IntVector = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t dot(const IntVector& a, const IntVector& b);
std::int64_t sum(const IntVector& a);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
std::string to_string(const IntVector& v);

// Square integer matrix, 0-based storage. Arithmetic is overflow-checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix identity(int n);

  int dim() const { return n_; }
  std::int64_t operator()(int i, int j) const { return a_[idx(i, j)]; }
  std::int64_t& operator()(int i, int j) { return a_[idx(i, j)]; }

  IntMatrix transpose() const;
  IntVector row(int i) const;
  IntVector col(int j) const;
  IntVector column_sums() const;  // (1,...,1) A
  bool all_positive() const;
  bool nonnegative() const;
  mpz_class determinant() const;  // Bareiss
  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

IntMatrix power(const IntMatrix& a, int k);

// True iff some power A^k with k <= m^2 is strictly positive (A nonnegative).
bool is_primitive(const IntMatrix& a);

}  // namespace ietk
