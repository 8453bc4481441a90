#include "ietk/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ietk/errors.hpp"

namespace ietk {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::from_high(std::initializer_list<long> high_to_low) {
  std::vector<mpz_class> c;
  for (long v : high_to_low) c.emplace_back(v);
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::x_minus(const mpz_class& a) { return IntPoly({-a, mpz_class(1)}); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
  static const mpz_class zero = 0;
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : zero;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + mpq_class(*it);
  return r;
}

Interval IntPoly::eval(const Interval& x) const {
  Interval r = Interval::point(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Interval::point(mpq_class(*it));
  return r;
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(r));
}

bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& q) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<mpz_class> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) {
    if (!a.is_zero()) return false;
    q = IntPoly();
    return true;
  }
  std::vector<mpz_class> quo(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), b.lead().get_mpz_t())) return false;
    mpz_class t = rem[i] / b.lead();
    quo[i - db] = t;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= t * b.coeff(j);
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  q = IntPoly(std::move(quo));
  return true;
}

IntPoly char_poly(const IntMatrix& a) {
  int n = a.dim();
  if (n == 0) return IntPoly({mpz_class(1)});
  // Entries of xI - A.
  std::vector<IntPoly> m(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> IntPoly& { return m[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      at(i, j) = i == j ? IntPoly({mpz_class(-a(i, j)), mpz_class(1)})
                        : IntPoly({mpz_class(-a(i, j))});
  // Leading principal minors of xI - A are monic, so pivots never vanish and
  // each Bareiss division is exact by a monic polynomial.
  IntPoly prev({mpz_class(1)});
  for (int k = 0; k < n - 1; ++k) {
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        IntPoly t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        IntPoly q;
        if (!divide_exact(t, prev, q)) throw std::logic_error("char_poly: inexact Bareiss step");
        at(i, j) = q;
      }
    prev = at(k, k);
  }
  return at(n - 1, n - 1);
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  if (n == 0) throw std::logic_error("divisors of zero");
  std::vector<std::pair<mpz_class, int>> pf;
  mpz_class d = 2;
  while (d * d <= n) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) pf.emplace_back(d, e);
    d += d == 2 ? 1 : 2;
  }
  if (n > 1) pf.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : pf) {
    std::size_t sz = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

IntPoly normalize(const IntPoly& p) {
  mpz_class c = p.content();
  if (p.lead() < 0) c = -c;
  std::vector<mpz_class> v = p.coeffs();
  for (auto& x : v) x /= c;
  return IntPoly(std::move(v));
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Find a factor of q of exact degree k (q primitive, no rational roots), by
// interpolating through divisors of q at k+1 integer points.
bool kronecker_factor(const IntPoly& q, int k, IntPoly& out) {
  std::vector<mpz_class> xs, vals;
  // Sample points 0, 1, -1, 2, -2, ...
  for (long i = 0; static_cast<int>(xs.size()) < k + 1; ++i) {
    long s = (i + 1) / 2 * (i % 2 ? 1 : -1);
    mpz_class v = q.eval(mpz_class(s));
    if (v == 0) continue;
    xs.emplace_back(s);
    vals.push_back(v);
  }
  std::vector<std::vector<mpz_class>> cand;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    auto d = positive_divisors(vals[j]);
    std::vector<mpz_class> c;
    for (auto& x : d) {
      c.push_back(x);
      if (j > 0) c.push_back(-x);  // overall sign fixed by the first point
    }
    cand.push_back(std::move(c));
  }
  mpz_class norm2 = 0;
  for (const auto& c : q.coeffs()) norm2 += c * c;
  mpz_class bound_base;
  mpz_sqrt(bound_base.get_mpz_t(), norm2.get_mpz_t());
  bound_base = (bound_base + 1) * abs(q.lead());

  std::vector<mpz_class> ys(xs.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == xs.size()) {
      // Newton divided differences over Q.
      std::size_t n = xs.size();
      std::vector<mpq_class> dd(ys.begin(), ys.end());
      for (std::size_t l = 1; l < n; ++l)
        for (std::size_t i = n - 1; i >= l; --i) {
          dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - l]);
          if (i == l) break;
        }
      std::vector<mpq_class> poly{dd[n - 1]};
      for (std::size_t i = n - 1; i-- > 0;) {
        std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
        for (std::size_t t = 0; t < poly.size(); ++t) {
          next[t + 1] += poly[t];
          next[t] -= poly[t] * mpq_class(xs[i]);
        }
        next[0] += dd[i];
        poly.swap(next);
      }
      while (!poly.empty() && poly.back() == 0) poly.pop_back();
      if (static_cast<int>(poly.size()) != k + 1) return false;
      std::vector<mpz_class> zc;
      for (std::size_t t = 0; t < poly.size(); ++t) {
        if (poly[t].get_den() != 1) return false;
        if (abs(poly[t].get_num()) > binomial(k, static_cast<int>(t)) * bound_base) return false;
        zc.push_back(poly[t].get_num());
      }
      IntPoly g(std::move(zc)), quo;
      if (!mpz_divisible_p(q.lead().get_mpz_t(), g.lead().get_mpz_t())) return false;
      if (!divide_exact(q, g, quo)) return false;
      out = normalize(g);
      return true;
    }
    for (const auto& d : cand[j]) {
      ys[j] = d;
      if (rec(j + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

void factor_primitive(const IntPoly& q, std::vector<IntPoly>& out) {
  if (q.degree() <= 0) return;
  if (q.degree() == 1) {
    out.push_back(normalize(q));
    return;
  }
  for (int k = 2; k <= q.degree() / 2; ++k) {
    IntPoly g;
    if (kronecker_factor(q, k, g)) {
      IntPoly rest;
      divide_exact(q, g, rest);
      out.push_back(g);
      factor_primitive(normalize(rest), out);
      return;
    }
  }
  out.push_back(normalize(q));
}

}  // namespace

std::vector<IntPoly> factor_int_poly(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("factor of the zero polynomial");
  if (p.degree() > kMaxFactorDegree)
    throw DegreeTooLarge("factor_int_poly: degree " + std::to_string(p.degree()) + " exceeds " +
                         std::to_string(kMaxFactorDegree));
  std::vector<IntPoly> factors;
  IntPoly q = normalize(p);

  // Powers of x.
  while (q.degree() > 0 && q.coeff(0) == 0) {
    factors.push_back(IntPoly({mpz_class(0), mpz_class(1)}));
    IntPoly t;
    divide_exact(q, factors.back(), t);
    q = t;
  }
  // Rational roots a/b with a | c0 and b | lead.
  if (q.degree() > 0) {
    auto da = positive_divisors(q.coeff(0));
    auto db = positive_divisors(q.lead());
    for (const auto& b : db)
      for (const auto& a0 : da)
        for (int s : {1, -1}) {
          mpz_class a = s * a0, g;
          mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
          if (g != 1) continue;
          IntPoly lin({-a, b});
          IntPoly t;
          while (q.degree() > 0 && divide_exact(q, lin, t)) {
            factors.push_back(lin);
            q = t;
          }
        }
  }
  factor_primitive(q, factors);
  std::sort(factors.begin(), factors.end(), poly_less);

  IntPoly prod({mpz_class(1)});
  for (const auto& f : factors) prod = prod * f;
  mpz_class c = p.lead() / prod.lead();
  if (c != 1) factors.insert(factors.begin(), IntPoly({c}));
  return factors;
}

}  // namespace ietk
