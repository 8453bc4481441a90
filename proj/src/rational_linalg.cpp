#include "ietk/rational_linalg.hpp"

#include <stdexcept>

namespace ietk {

QMatrix to_qmatrix(const IntMatrix& a) {
  QMatrix m(a.dim(), std::vector<mpq_class>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m[i][j] = static_cast<long>(a(i, j));
  return m;
}

std::vector<int> rref(QMatrix& m) {
  std::vector<int> piv;
  if (m.empty()) return piv;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  m.resize(r);
  return piv;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<IntVector> integer_kernel(const QMatrix& m0, int cols) {
  QMatrix m = m0;
  std::vector<int> piv = rref(m);
  std::vector<char> is_piv(cols, 0);
  for (int p : piv) is_piv[p] = 1;
  std::vector<IntVector> out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    mpz_class l = 1;
    for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> z(cols);
    mpz_class g = 0;
    for (int i = 0; i < cols; ++i) {
      mpq_class t = v[i] * l;
      z[i] = t.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    IntVector iv(cols);
    for (int i = 0; i < cols; ++i) {
      mpz_class t = z[i] / g;
      if (!t.fits_slong_p()) throw std::overflow_error("kernel vector entry exceeds int64");
      iv[i] = t.get_si();
    }
    out.push_back(iv);
  }
  return out;
}

RowSpan::RowSpan(const std::vector<IntVector>& rows, int dim) : dim_(dim) {
  for (const auto& r : rows) {
    std::vector<mpq_class> q(dim);
    for (int i = 0; i < dim; ++i) q[i] = static_cast<long>(r[i]);
    basis_.push_back(std::move(q));
  }
  pivots_ = rref(basis_);
}

bool RowSpan::contains(const IntVector& v) const {
  std::vector<mpq_class> x(dim_);
  for (int i = 0; i < dim_; ++i) x[i] = static_cast<long>(v[i]);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    mpq_class f = x[pivots_[r]];
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j) x[j] -= f * basis_[r][j];
  }
  for (const auto& t : x)
    if (t != 0) return false;
  return true;
}

}  // namespace ietk
