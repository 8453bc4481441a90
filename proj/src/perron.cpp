#include "ietk/perron.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ietk/errors.hpp"
#include "ietk/rational_linalg.hpp"

namespace ietk {

namespace {

// Root isolation state for the Perron root. The bracket only ever shrinks, so
// memoised answers stay valid for every later request.
struct RootSolver {
  IntPoly p;
  mpq_class lo, hi;
  int sign_lo = 0;
  bool exact = false;
  std::mutex mu;

  Interval at(int bits) {
    std::lock_guard<std::mutex> lock(mu);
    if (exact) return Interval::point(lo);
    mpq_class target(mpz_class(1), mpz_class(1) << bits);
    while (hi - lo > target) {
      mpq_class mid = (lo + hi) / 2;
      int s = sgn(p.eval(mid));
      if (s == 0) {
        lo = hi = mid;
        exact = true;
        break;
      }
      if (s == sign_lo)
        lo = mid;
      else
        hi = mid;
    }
    return {lo, hi};
  }
};

std::vector<mpq_class> mat_apply(const IntMatrix& a, const std::vector<mpq_class>& v) {
  int n = a.dim();
  std::vector<mpq_class> r(n, mpq_class(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j)) r[i] += mpq_class(static_cast<long>(a(i, j))) * v[j];
  return r;
}

// Collatz-Wielandt bracket min/max (Av)_i / v_i for a positive vector v.
std::pair<mpq_class, mpq_class> cw_bracket(const IntMatrix& a, const std::vector<mpq_class>& v) {
  auto av = mat_apply(a, v);
  mpq_class lo = av[0] / v[0], hi = lo;
  for (std::size_t i = 1; i < v.size(); ++i) {
    mpq_class r = av[i] / v[i];
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

QMatrix poly_of_matrix(const IntPoly& q, const QMatrix& m) {
  std::size_t n = m.size();
  QMatrix r(n, std::vector<mpq_class>(n, mpq_class(0)));
  for (int k = q.degree(); k >= 0; --k) {
    QMatrix t(n, std::vector<mpq_class>(n, mpq_class(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (r[i][l] != 0)
          for (std::size_t j = 0; j < n; ++j) t[i][j] += r[i][l] * m[l][j];
    for (std::size_t i = 0; i < n; ++i) t[i][i] += mpq_class(q.coeff(k));
    r.swap(t);
  }
  return r;
}

}  // namespace

PerronResult perron(const IntMatrix& a, int target_bits) {
  int n = a.dim();
  if (!is_primitive(a)) throw NotPrimitive("perron: matrix is not primitive");
  PerronResult out;
  out.char_poly = char_poly(a);
  const IntPoly& p = out.char_poly;
  IntPoly dp = p.derivative();

  // Floating power iteration only supplies a good positive test vector; the
  // bracket it induces is rigorous for any positive vector.
  std::vector<double> vd(n, 1.0 / n);
  for (int it = 0; it < 400; ++it) {
    std::vector<double> w(n, 0.0);
    double s = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) w[i] += static_cast<double>(a(i, j)) * vd[j];
      s += w[i];
    }
    for (int i = 0; i < n; ++i) vd[i] = w[i] / s;
  }
  std::vector<mpq_class> v(n);
  for (int i = 0; i < n; ++i) v[i] = vd[i] > 0 ? mpq_class(vd[i]) : mpq_class(1, 1 << 20);

  auto solver = std::make_shared<RootSolver>();
  solver->p = p;
  for (int attempt = 0;; ++attempt) {
    auto [lo, hi] = cw_bracket(a, v);
    lo = floor_dyadic(lo, 64);
    hi = ceil_dyadic(hi, 64);
    if (sgn(p.eval(lo)) == 0) {
      solver->lo = solver->hi = lo;
      solver->exact = true;
      break;
    }
    if (sgn(p.eval(hi)) == 0) {
      solver->lo = solver->hi = hi;
      solver->exact = true;
      break;
    }
    Interval d = dp.eval(Interval(lo, hi));
    if (!d.contains_zero()) {
      solver->lo = lo;
      solver->hi = hi;
      solver->sign_lo = sgn(p.eval(lo));
      break;
    }
    if (attempt > 4000) throw AmbiguousComparison("perron: could not isolate the dominant root");
    auto w = mat_apply(a, v);
    mpq_class s = 0;
    for (auto& x : w) s += x;
    for (int i = 0; i < n; ++i) v[i] = ceil_dyadic(w[i] / s, 256);
  }

  out.theta = CertifiedReal::from_generator([solver](int bits) { return solver->at(bits); },
                                            target_bits);

  // First column of adj(xI - A) = sum_k c_k sum_{i<k} x^{k-1-i} A^i.
  std::vector<IntMatrix> pw{IntMatrix::identity(n)};
  for (int i = 1; i < n; ++i) pw.push_back(pw.back() * a);
  std::vector<std::vector<mpz_class>> col(n, std::vector<mpz_class>(n, mpz_class(0)));
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i)
      for (int r = 0; r < n; ++r) col[r][k - 1 - i] += p.coeff(k) * static_cast<long>(pw[i](r, 0));
  std::vector<IntPoly> adj;
  for (int r = 0; r < n; ++r) adj.emplace_back(col[r]);

  // Guard bits from the size of the adjugate entries near theta.
  Interval th = solver->at(64);
  mpq_class big = 1;
  Interval total = Interval::point(0);
  for (auto& q : adj) {
    { mpq_class d = q.derivative().eval(th).mag() + 1; if (d > big) big = d; }
    total = total + q.eval(th);
  }
  if (sgn(total.lo) <= 0) throw AmbiguousComparison("perron: adjugate column not positive");
  int guard = static_cast<int>(std::max<long>(0, ilog2(big)) + std::max<long>(0, -ilog2(total.lo))) + 8;

  for (int r = 0; r < n; ++r) {
    auto gen = [solver, adj, r, guard](int bits) {
      Interval t = solver->at(bits + 2 * guard);
      Interval num = adj[r].eval(t);
      Interval den = Interval::point(0);
      for (const auto& q : adj) den = den + q.eval(t);
      return round_outward(num / den, bits + 2);
    };
    out.vector.push_back(CertifiedReal::from_generator(gen, target_bits));
  }

  // Minimal polynomial and the integer relation lattice of the eigenvector.
  try {
    auto factors = factor_int_poly(p);
    for (int bits = 64; bits <= kDefaultMaxBits && out.minimal_polynomial.is_zero(); bits *= 2) {
      Interval t = out.theta.at(bits);
      std::vector<const IntPoly*> hits;
      for (const auto& f : factors)
        if (f.degree() > 0 && f.eval(t).contains_zero()) hits.push_back(&f);
      if (hits.size() == 1) out.minimal_polynomial = *hits.front();
    }
    if (!out.minimal_polynomial.is_zero()) {
      IntPoly q;
      divide_exact(p, out.minimal_polynomial, q);
      QMatrix at = to_qmatrix(a.transpose());
      out.relations = integer_kernel(poly_of_matrix(q, at), n);
    }
  } catch (const DegreeTooLarge&) {
    // relations stay empty: equality of distinct forms is then never claimed
  }
  return out;
}

std::vector<Interval> perron_residual(const IntMatrix& a, const PerronResult& r, int bits) {
  int n = a.dim();
  Interval th = r.theta.at(bits);
  std::vector<Interval> v;
  for (const auto& x : r.vector) v.push_back(x.at(bits));
  std::vector<Interval> out;
  for (int i = 0; i < n; ++i) {
    Interval s = Interval::point(0);
    for (int j = 0; j < n; ++j) s = s + Interval::point(mpq_class(static_cast<long>(a(i, j)))) * v[j];
    out.push_back(s - th * v[i]);
  }
  return out;
}

}  // namespace ietk
