#include "ietk/interval.hpp"

#include <algorithm>
#include <stdexcept>

#include "ietk/errors.hpp"

namespace ietk {

Interval::Interval(const mpq_class& l, const mpq_class& h) : lo(l), hi(h) {
  if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
}

mpq_class Interval::mag() const {
  mpq_class a = abs(lo), b = abs(hi);
  return a > b ? a : b;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (sgn(a.lo) >= 0 && sgn(b.lo) >= 0) return {a.lo * b.lo, a.hi * b.hi};
  mpq_class p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(p, p + 4);
  return {*mn, *mx};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw AmbiguousComparison("interval division by an enclosure of zero");
  Interval inv(1 / b.hi, 1 / b.lo);
  return a * inv;
}

Interval intersect(const Interval& a, const Interval& b) {
  mpq_class lo = a.lo > b.lo ? a.lo : b.lo;
  mpq_class hi = a.hi < b.hi ? a.hi : b.hi;
  if (lo > hi) throw std::logic_error("intersect: disjoint enclosures of the same value");
  return {lo, hi};
}

Interval hull(const Interval& a, const Interval& b) {
  return {a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
}

namespace {

mpz_class pow2(int bits) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  return r;
}

}  // namespace

mpq_class floor_dyadic(const mpq_class& q, int bits) {
  mpz_class s = pow2(bits);
  mpz_class n = q.get_num() * s, f;
  mpz_fdiv_q(f.get_mpz_t(), n.get_mpz_t(), q.get_den_mpz_t());
  mpq_class r(f, s);
  r.canonicalize();
  return r;
}

mpq_class ceil_dyadic(const mpq_class& q, int bits) {
  mpz_class s = pow2(bits);
  mpz_class n = q.get_num() * s, c;
  mpz_cdiv_q(c.get_mpz_t(), n.get_mpz_t(), q.get_den_mpz_t());
  mpq_class r(c, s);
  r.canonicalize();
  return r;
}

Interval round_outward(const Interval& x, int bits) {
  if (x.lo.get_den() == 1 && x.hi.get_den() == 1) return x;
  return {floor_dyadic(x.lo, bits), ceil_dyadic(x.hi, bits)};
}

Interval sqrt_enclosure(const Interval& x, int bits) {
  if (sgn(x.lo) < 0) throw std::domain_error("sqrt of an enclosure reaching below zero");
  mpz_class s4 = pow2(2 * bits);
  mpz_class s = pow2(bits);
  // lower: floor(sqrt(floor(lo * 4^bits))) / 2^bits
  mpz_class nl = x.lo.get_num() * s4, fl, rl;
  mpz_fdiv_q(fl.get_mpz_t(), nl.get_mpz_t(), x.lo.get_den_mpz_t());
  mpz_sqrt(rl.get_mpz_t(), fl.get_mpz_t());
  // upper: ceil(sqrt(ceil(hi * 4^bits))) / 2^bits
  mpz_class nh = x.hi.get_num() * s4, ch, rh;
  mpz_cdiv_q(ch.get_mpz_t(), nh.get_mpz_t(), x.hi.get_den_mpz_t());
  mpz_sqrt(rh.get_mpz_t(), ch.get_mpz_t());
  if (rh * rh < ch) rh += 1;
  mpq_class lo(rl, s), hi(rh, s);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

long ilog2(const mpq_class& q) {
  if (sgn(q) == 0) throw std::domain_error("ilog2(0)");
  long n = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
  long d = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  return n - d;  // within 1 of floor(log2|q|)
}

std::string to_decimal(const mpq_class& q, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class t = abs(q) * scale;
  mpz_class n = t.get_num(), r;
  // round half up
  mpz_class twice = 2 * n + t.get_den();
  mpz_class den2 = 2 * t.get_den();
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  std::string s = r.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  if (sgn(q) < 0 && r != 0) out.insert(0, "-");
  return out;
}

}  // namespace ietk
