#include "ietk/length_basis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ietk/errors.hpp"
#include "ietk/kernels/form_eval.hpp"

namespace ietk {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void reduce(LinearForm& f) {
  if (f.den <= 0) throw std::invalid_argument("LinearForm: denominator must be positive");
  if (f.den == 1) return;
  std::int64_t g = f.den;
  for (auto c : f.coef) g = gcd64(g, c);
  if (g > 1) {
    f.den /= g;
    for (auto& c : f.coef) c /= g;
  }
}

constexpr double kExactLimit = 9007199254740992.0;  // 2^53

}  // namespace

LinearForm::LinearForm(IntVector c, std::int64_t d) : coef(std::move(c)), den(d) { reduce(*this); }

LinearForm LinearForm::unit(std::size_t dim, std::size_t i) {
  IntVector c(dim, 0);
  c[i] = 1;
  return LinearForm(std::move(c));
}

bool LinearForm::is_zero() const {
  for (auto c : coef)
    if (c) return false;
  return true;
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("LinearForm dimension mismatch");
  if (a.den == b.den) return LinearForm(a.coef + b.coef, a.den);
  std::int64_t g = std::gcd(a.den, b.den);
  std::int64_t fa = b.den / g, fb = a.den / g;
  IntVector c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_add(checked_mul(a.coef[i], fa), checked_mul(b.coef[i], fb));
  return LinearForm(std::move(c), checked_mul(a.den, fa));
}

LinearForm operator-(const LinearForm& a) { return LinearForm(-a.coef, a.den); }
LinearForm operator-(const LinearForm& a, const LinearForm& b) { return a + (-b); }

LinearForm operator*(std::int64_t k, const LinearForm& a) {
  IntVector c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(k, a.coef[i]);
  return LinearForm(std::move(c), a.den);
}

LinearForm LinearForm::divided(std::int64_t k) const {
  if (k == 0) throw std::domain_error("LinearForm divided by zero");
  LinearForm r = *this;
  if (k < 0) {
    r = -r;
    k = -k;
  }
  r.den = checked_mul(r.den, k);
  reduce(r);
  return r;
}

LinearForm combine(const IntVector& w, const std::vector<LinearForm>& f) {
  if (f.empty()) throw std::invalid_argument("combine: no forms");
  LinearForm r = LinearForm::zero(f[0].dim());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (w[i]) r = r + w[i] * f[i];
  return r;
}

LengthBasis::LengthBasis(std::vector<CertifiedReal> values, std::vector<IntVector> relations, int max_bits)
    : values_(std::move(values)),
      relations_(std::move(relations)),
      relation_span_(relations_, static_cast<int>(values_.size())),
      max_bits_(max_bits) {
  for (const auto& v : values_) all_exact_ = all_exact_ && v.is_exact();
  const auto& enc = enclosures(128);
  for (const auto& e : enc) {
    mpq_class m = e.mid();
    double md = m.get_d();
    mpq_class dev = std::max(abs(e.hi - mpq_class(md)), abs(mpq_class(md) - e.lo));
    double r = dev.get_d();
    r = r * (1.0 + 0x1p-50) + 0x1p-1070;
    mid_.push_back(md);
    rad_.push_back(r);
  }
}

const std::vector<Interval>& LengthBasis::enclosures(int bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(bits);
  if (it != cache_.end()) return it->second;
  std::vector<Interval> v;
  for (const auto& x : values_) v.push_back(x.at(bits));
  return cache_.emplace(bits, std::move(v)).first->second;
}

Interval LengthBasis::enclose(const LinearForm& f, int bits) const {
  const auto& enc = enclosures(bits);
  Interval s = Interval::point(0);
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (f.coef[i]) s = s + Interval::point(mpq_class(static_cast<long>(f.coef[i]))) * enc[i];
  if (f.den != 1) s = s * Interval::point(mpq_class(1, static_cast<unsigned long>(f.den)));
  return s;
}

CertifiedReal LengthBasis::to_real(const LinearForm& f) const {
  bool exact = true;
  for (std::size_t i = 0; i < f.dim() && exact; ++i) exact = f.coef[i] == 0 || values_[i].is_exact();
  if (exact) {
    // beta_0 = 0 and forms over rational basis entries stay comparable for equality
    mpq_class q = 0;
    for (std::size_t i = 0; i < f.dim(); ++i)
      if (f.coef[i]) q += mpq_class(static_cast<long>(f.coef[i])) * values_[i].exact_value();
    q /= mpq_class(static_cast<long>(f.den));
    return CertifiedReal(q);
  }
  mpq_class total = 1;
  for (auto c : f.coef) total += std::abs(c);
  int guard = static_cast<int>(ilog2(total)) + 4;
  auto values = values_;
  LinearForm g = f;
  return CertifiedReal::from_generator([values, g, guard](int bits) {
    Interval s = Interval::point(0);
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (g.coef[i]) s = s + Interval::point(mpq_class(static_cast<long>(g.coef[i]))) * values[i].at(bits + guard);
    if (g.den != 1) s = s * Interval::point(mpq_class(1, static_cast<unsigned long>(g.den)));
    return round_outward(s, bits + 2);
  });
}

FastEnclosure LengthBasis::fast(const LinearForm& f) const {
  constexpr std::size_t kStack = 32;
  std::size_t d = dim();
  if (d > kStack) {
    std::vector<FastEnclosure> out;
    fast_batch({f}, out);
    return out[0];
  }
  double coef[kStack];
  for (std::size_t i = 0; i < d; ++i) {
    coef[i] = static_cast<double>(f.coef[i]);
    if (std::fabs(coef[i]) >= kExactLimit) return {0.0, INFINITY};
  }
  double val, err;
  kernels::enclose_forms_scalar(coef, 1, d, mid_.data(), rad_.data(), &val, &err);
  if (f.den == 1) return {val, err};
  double den = static_cast<double>(f.den);
  double v = val / den;
  return {v, (err / den + std::fabs(v) * 0x1p-51) * (1.0 + 0x1p-40) + 0x1p-1000};
}

void LengthBasis::fast_batch(const std::vector<LinearForm>& forms, std::vector<FastEnclosure>& out) const {
  std::size_t n = forms.size(), d = dim();
  out.assign(n, FastEnclosure{0.0, INFINITY});
  std::vector<double> coef(n * d);
  std::vector<char> ok(n, 1);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      double c = static_cast<double>(forms[k].coef[i]);
      if (std::fabs(c) >= kExactLimit) ok[k] = 0;
      coef[i * n + k] = c;
    }
  std::vector<double> val(n), err(n);
  kernels::enclose_forms(coef.data(), n, d, mid_.data(), rad_.data(), val.data(), err.data());
  for (std::size_t k = 0; k < n; ++k) {
    if (!ok[k]) continue;
    double den = static_cast<double>(forms[k].den);
    if (forms[k].den == 1) {
      out[k] = {val[k], err[k]};
    } else {
      double v = val[k] / den;
      out[k] = {v, (err[k] / den + std::fabs(v) * 0x1p-51) * (1.0 + 0x1p-40) + 0x1p-1000};
    }
  }
}

bool LengthBasis::provably_zero(const LinearForm& f) const {
  if (f.is_zero()) return true;
  if (!relation_span_.empty() && relation_span_.contains(f.coef)) return true;
  if (all_exact_) return sgn(enclose(f, 64).lo) == 0;
  return false;
}

Sign LengthBasis::sign(const LinearForm& f) const {
  if (f.is_zero()) return Sign::Zero;
  FastEnclosure e = fast(f);
  if (e.val - e.err > 0) return Sign::Positive;
  if (e.val + e.err < 0) return Sign::Negative;
  if (provably_zero(f)) return Sign::Zero;
  if (all_exact_) return sgn(enclose(f, 64).lo) > 0 ? Sign::Positive : Sign::Negative;
  for (int bits = 128; bits <= max_bits_; bits *= 2) {
    Interval s = enclose(f, bits);
    if (sgn(s.lo) > 0) return Sign::Positive;
    if (sgn(s.hi) < 0) return Sign::Negative;
  }
  return Sign::Unknown;
}

int definite_sign(const LengthBasis& b, const LinearForm& f) {
  switch (b.sign(f)) {
    case Sign::Negative: return -1;
    case Sign::Zero: return 0;
    case Sign::Positive: return 1;
    case Sign::Unknown: break;
  }
  throw AmbiguousComparison("sign of an orbit-point difference undetermined at max precision");
}

}  // namespace ietk
