#pragma once

#include <gmpxx.h>

#include <vector>

#include "ietk/int_matrix.hpp"

namespace ietk {

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix to_qmatrix(const IntMatrix& a);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

// Basis of {x : M x = 0}, each vector scaled to a primitive integer vector.
std::vector<IntVector> integer_kernel(const QMatrix& m, int cols);

// Row space membership test for a fixed set of rows.
class RowSpan {
 public:
  RowSpan() = default;
  RowSpan(const std::vector<IntVector>& rows, int dim);
  bool contains(const IntVector& v) const;
  bool empty() const { return basis_.empty(); }

 private:
  QMatrix basis_;
  std::vector<int> pivots_;
  int dim_ = 0;
};

}  // namespace ietk
