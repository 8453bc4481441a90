#include "ietk/certified_real.hpp"

#include <algorithm>
#include <stdexcept>

#include "ietk/errors.hpp"

namespace ietk {

namespace {

// Guard bits covering the magnitude of an enclosure.
int guard_for(const Interval& x) {
  mpq_class m = x.mag();
  if (sgn(m) == 0) return 2;
  long l = ilog2(m);
  return static_cast<int>(std::max<long>(0, l + 2)) + 2;
}

// Lower bound on |x| as a guard-bit estimate for divisions and square roots.
int inverse_guard_for(const Interval& x) {
  mpq_class m = sgn(x.lo) > 0 ? x.lo : -x.hi;
  long l = ilog2(m);
  return static_cast<int>(std::max<long>(0, -l + 2)) + 2;
}

// Evaluate an operand at the requested bits, as exact point or via its generator.
struct Operand {
  Interval enc;
  std::shared_ptr<const CertifiedReal::Generator> gen;

  Interval at(int bits) const {
    if (!gen) return enc;
    return intersect(enc, (*gen)(bits));
  }
};

Operand operand(const CertifiedReal& x);

}  // namespace

CertifiedReal CertifiedReal::from_generator(Generator g, int bits) {
  CertifiedReal r;
  r.gen_ = std::make_shared<const Generator>(std::move(g));
  r.enc_ = (*r.gen_)(bits);
  r.bits_ = bits;
  return r;
}

CertifiedReal CertifiedReal::parse(const std::string& text) {
  std::string t = text;
  // base 10 throughout: GMP's default base 0 reads a leading 0 as octal
  if (t.empty() || t.find_first_not_of("+-0123456789./") != std::string::npos)
    throw ValidationError("bad number: " + text);
  auto dot = t.find('.');
  if (dot == std::string::npos) {
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw ValidationError("bad number: " + text);
    q.canonicalize();
    return CertifiedReal(q);
  }
  bool neg = !t.empty() && t[0] == '-';
  std::string digits = t.substr(neg ? 1 : 0);
  dot = digits.find('.');
  std::string frac = digits.substr(dot + 1);
  std::string whole = digits.substr(0, dot) + frac;
  if (whole.empty() || whole.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("bad decimal: " + text);
  mpz_class num(whole, 10), den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  mpq_class q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return CertifiedReal(q);
}

const mpq_class& CertifiedReal::exact_value() const {
  if (!is_exact()) throw std::logic_error("CertifiedReal is not an exact rational");
  return enc_.lo;
}

CertifiedReal CertifiedReal::refined(int bits) const {
  if (!gen_ || bits <= bits_) return *this;
  CertifiedReal r = *this;
  r.enc_ = intersect(enc_, (*gen_)(bits));
  r.bits_ = bits;
  return r;
}

std::string CertifiedReal::to_decimal(int digits) const {
  return ietk::to_decimal(refined(static_cast<int>(digits * 3.33) + 16).enc_.mid(), digits);
}

namespace {

Operand operand(const CertifiedReal& x) {
  Operand o;
  o.enc = x.enclosure();
  if (!x.is_exact()) {
    // Capture a copy; refinement is driven by the copy's generator.
    auto copy = std::make_shared<CertifiedReal>(x);
    o.gen = std::make_shared<const CertifiedReal::Generator>(
        [copy](int bits) { return copy->at(bits); });
  }
  return o;
}

}  // namespace

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  if (a.is_exact() && b.is_exact()) return CertifiedReal(a.enc_.lo + b.enc_.lo);
  Operand x = operand(a), y = operand(b);
  return CertifiedReal::from_generator(
      [x, y](int bits) { return round_outward(x.at(bits + 2) + y.at(bits + 2), bits + 2); },
      std::max(a.bits_, b.bits_));
}

CertifiedReal operator-(const CertifiedReal& a) {
  if (a.is_exact()) return CertifiedReal(-a.enc_.lo);
  Operand x = operand(a);
  return CertifiedReal::from_generator([x](int bits) { return -x.at(bits); }, a.bits_);
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) { return a + (-b); }

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  if (a.is_exact() && b.is_exact()) return CertifiedReal(a.enc_.lo * b.enc_.lo);
  Operand x = operand(a), y = operand(b);
  int guard = std::max(guard_for(a.enc_), guard_for(b.enc_));
  return CertifiedReal::from_generator(
      [x, y, guard](int bits) {
        return round_outward(x.at(bits + guard) * y.at(bits + guard), bits + 2);
      },
      std::max(a.bits_, b.bits_));
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal bb = b;
  for (int bits = std::max(64, b.bits_); bb.enc_.contains_zero(); bits *= 2) {
    if (b.is_exact() || bits > kDefaultMaxBits)
      throw AmbiguousComparison("division by a value not separated from zero");
    bb = b.refined(bits);
  }
  if (a.is_exact() && bb.is_exact()) return CertifiedReal(a.enc_.lo / bb.enc_.lo);
  Operand x = operand(a), y = operand(bb);
  int inv = inverse_guard_for(bb.enc_);
  int guard = std::max(guard_for(a.enc_), 0) + 2 * inv;
  return CertifiedReal::from_generator(
      [x, y, guard](int bits) {
        return round_outward(x.at(bits + guard) / y.at(bits + guard), bits + 2);
      },
      std::max(a.bits_, bb.bits_));
}

CertifiedReal sqrt(const CertifiedReal& x) {
  if (x.is_exact()) {
    const mpq_class& q = x.enc_.lo;
    if (sgn(q) < 0) throw std::domain_error("sqrt of a negative number");
    if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
      mpz_class n, d;
      mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
      return CertifiedReal(mpq_class(n, d));
    }
  }
  CertifiedReal xx = x;
  for (int bits = std::max(64, x.bits_); sgn(xx.enc_.lo) <= 0; bits *= 2) {
    if (bits > kDefaultMaxBits) throw AmbiguousComparison("sqrt argument not separated from zero");
    xx = x.refined(bits);
  }
  Operand o = operand(xx);
  int guard = inverse_guard_for(xx.enc_);
  return CertifiedReal::from_generator(
      [o, guard](int bits) { return sqrt_enclosure(o.at(bits + guard), bits + 2); }, xx.bits_);
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Greater: return "Greater";
    case Ordering::Equal: return "Equal";
    case Ordering::Ambiguous: return "Ambiguous";
  }
  return "?";
}

Ordering compare(const CertifiedReal& x, const CertifiedReal& y, int max_bits) {
  CertifiedReal a = x, b = y;
  int bits = std::max({64, a.bits(), b.bits()});
  for (;;) {
    if (a.hi() < b.lo()) return Ordering::Less;
    if (a.lo() > b.hi()) return Ordering::Greater;
    if (a.is_exact() && b.is_exact()) return Ordering::Equal;
    if (bits >= max_bits) return Ordering::Ambiguous;
    bits = std::min(2 * bits, max_bits);
    a = a.refined(bits);
    b = b.refined(bits);
  }
}

int certified_sign(const CertifiedReal& x, int max_bits) {
  switch (compare(x, CertifiedReal(0L), max_bits)) {
    case Ordering::Less: return -1;
    case Ordering::Greater: return 1;
    case Ordering::Equal: return 0;
    case Ordering::Ambiguous: break;
  }
  throw AmbiguousComparison("sign undetermined at max precision");
}

}  // namespace ietk
