#include "ietk/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ietk {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiplication overflow");
  return r;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

std::int64_t sum(const IntVector& a) {
  std::int64_t s = 0;
  for (auto x : a) s = checked_add(s, x);
  return s;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], -1);
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) { return a + (-b); }

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(static_cast<int>(rows.size())) {
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("IntMatrix: not square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::row(int i) const {
  return IntVector(a_.begin() + static_cast<long>(idx(i, 0)), a_.begin() + static_cast<long>(idx(i, 0)) + n_);
}

IntVector IntMatrix::col(int j) const {
  IntVector c(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
  return c;
}

IntVector IntMatrix::column_sums() const {
  IntVector s(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s[static_cast<std::size_t>(j)] = checked_add(s[static_cast<std::size_t>(j)], (*this)(i, j));
  return s;
}

bool IntMatrix::all_positive() const {
  for (auto x : a_)
    if (x <= 0) return false;
  return true;
}

bool IntMatrix::nonnegative() const {
  for (auto x : a_)
    if (x < 0) return false;
  return true;
}

mpz_class IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<mpz_class> m(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) m[i] = static_cast<long>(a_[i]);
  auto at = [&](int i, int j) -> mpz_class& { return m[idx(i, j)]; };
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (int j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        mpz_class t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? "," : "") << '[';
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  IntMatrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < a.n_; ++j) c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (static_cast<int>(v.size()) != a.n_) throw std::invalid_argument("matrix/vector size mismatch");
  IntVector r(v.size(), 0);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j)
      r[static_cast<std::size_t>(i)] = checked_add(r[static_cast<std::size_t>(i)], checked_mul(a(i, j), v[static_cast<std::size_t>(j)]));
  return r;
}

IntMatrix power(const IntMatrix& a, int k) {
  IntMatrix r = IntMatrix::identity(a.dim());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

bool is_primitive(const IntMatrix& a) {
  int n = a.dim();
  if (!a.nonnegative()) return false;
  std::vector<char> pat(static_cast<std::size_t>(n) * n), cur;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pat[static_cast<std::size_t>(i * n + j)] = a(i, j) > 0;
  cur = pat;
  for (int k = 1; k <= n * n; ++k) {
    bool pos = true;
    for (char c : cur) pos = pos && c;
    if (pos) return true;
    std::vector<char> nxt(cur.size(), 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (cur[static_cast<std::size_t>(i * n + l)])
          for (int j = 0; j < n; ++j)
            if (pat[static_cast<std::size_t>(l * n + j)]) nxt[static_cast<std::size_t>(i * n + j)] = 1;
    cur.swap(nxt);
  }
  return false;
}

}  // namespace ietk
