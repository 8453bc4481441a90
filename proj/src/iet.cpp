#include "ietk/iet.hpp"

#include <algorithm>
#include <map>

#include "ietk/errors.hpp"

namespace ietk {

IetMap::IetMap(IetPair pair) : pair_(std::move(pair)) {
  int m = pair_.m();
  std::size_t d = pair_.basis->dim();
  betas_.push_back(LinearForm::zero(d));
  for (int i = 1; i <= m; ++i) betas_.push_back(betas_.back() + pair_.lengths[i - 1]);
  for (int i = 1; i <= m; ++i) {
    LinearForm left = LinearForm::zero(d);
    for (int j = 1; j <= m; ++j)
      if (pair_.perm(j) < pair_.perm(i)) left = left + pair_.lengths[j - 1];
    offsets_.push_back(left - betas_[i - 1]);
  }
  for (int p = 1; p <= m; ++p) image_cuts_.push_back(image_left(pair_.perm.inverse(p)));
  image_cuts_.push_back(betas_.back());
  pair_.basis->fast_batch(betas_, betas_fast_);
  pair_.basis->fast_batch(image_cuts_, image_fast_);
}

int IetMap::compare(const LinearForm& x, const LinearForm& y) const {
  if (x == y) return 0;
  return definite_sign(basis(), x - y);
}

namespace {

// -1, 0, +1 when the fast enclosures decide, 2 otherwise.
int fast_compare(const FastEnclosure& a, const FastEnclosure& b) {
  if (a.val + a.err < b.val - b.err) return -1;
  if (a.val - a.err > b.val + b.err) return 1;
  return 2;
}

}  // namespace

int IetMap::search(const LinearForm& x, const std::vector<LinearForm>& cuts,
                   const std::vector<FastEnclosure>& fast) const {
  FastEnclosure fx = basis().fast(x);
  auto cmp = [&](int t) {  // sign of x - cuts[t]
    int c = fast_compare(fx, fast[t]);
    if (c != 2) return c;
    Sign s = basis().sign(x - cuts[t]);
    if (s == Sign::Unknown) throw AmbiguousInterval("orbit point not separated from a breakpoint");
    return s == Sign::Negative ? -1 : s == Sign::Zero ? 0 : 1;
  };
  int m = this->m();
  if (cmp(0) < 0 || cmp(m) >= 0) throw OutOfDomain("point outside [0, |lambda|)");
  int lo = 0, hi = m;  // cuts[lo] <= x < cuts[hi]
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    if (cmp(mid) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo + 1;
}

int IetMap::locate(const LinearForm& x) const { return search(x, betas_, betas_fast_); }

int IetMap::locate_image(const LinearForm& x) const {
  return perm().inverse(search(x, image_cuts_, image_fast_));
}

int IetMap::search(const CertifiedReal& x, const std::vector<LinearForm>& cuts) const {
  auto cmp = [&](int t) {
    Ordering o = ietk::compare(x, basis().to_real(cuts[t]), basis().max_bits());
    if (o == Ordering::Ambiguous) throw AmbiguousInterval("point not separated from a breakpoint");
    return o == Ordering::Less ? -1 : o == Ordering::Equal ? 0 : 1;
  };
  int m = this->m();
  if (cmp(0) < 0 || cmp(m) >= 0) throw OutOfDomain("point outside [0, |lambda|)");
  int lo = 0, hi = m;
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    if (cmp(mid) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo + 1;
}

CertifiedReal IetMap::apply(const CertifiedReal& x) const {
  int i = locate(x);
  return x + basis().to_real(offsets_[i - 1]);
}

CertifiedReal IetMap::apply_inv(const CertifiedReal& x) const {
  int i = perm().inverse(search(x, image_cuts_));
  return x - basis().to_real(offsets_[i - 1]);
}

Word code_orbit(const IetMap& t, const LinearForm& x0, int n) {
  Word w;
  LinearForm x = x0;
  for (int k = 0; k < n; ++k) {
    int i = t.locate(x);
    w.push_back(i);
    x = x + t.offset(i);
  }
  return w;
}

IntVector orbit_population(const IetMap& t, LinearForm& x, std::int64_t n) {
  IntVector counts(t.m(), 0);
  for (std::int64_t k = 0; k < n; ++k) {
    int i = t.locate(x);
    ++counts[i - 1];
    const LinearForm& o = t.offset(i);
    if (o.den == 1) {
      // (c + d o) / d stays in lowest terms
      for (std::size_t c = 0; c < x.coef.size(); ++c)
        x.coef[c] = checked_add(x.coef[c], checked_mul(x.den, o.coef[c]));
    } else {
      x = x + o;
    }
  }
  return counts;
}

Word code_orbit(const IetMap& t, const CertifiedReal& x0, int n) {
  Word w;
  CertifiedReal x = x0;
  for (int k = 0; k < n; ++k) {
    int i = t.locate(x);
    w.push_back(i);
    x = x + t.basis().to_real(t.offset(i));
  }
  return w;
}

std::optional<WordInterval> word_interval(const IetMap& t, const Word& w) {
  if (w.empty()) throw ValidationError("word_interval of the empty word");
  for (int s : w)
    if (s < 1 || s > t.m()) throw ValidationError("word symbol out of range");
  WordInterval iv{{t.beta(w[0] - 1), 0, w[0] - 1}, {t.beta(w[0]), 0, w[0]}};
  if (t.compare(iv.left.x, iv.right.x) >= 0) return std::nullopt;
  LinearForm shift = LinearForm::zero(t.basis().dim());
  for (std::size_t j = 1; j < w.size(); ++j) {
    shift = shift + t.offset(w[j - 1]);
    LinearForm cl = t.beta(w[j] - 1) - shift;
    LinearForm cr = t.beta(w[j]) - shift;
    if (t.compare(cl, iv.left.x) > 0) iv.left = {cl, static_cast<int>(j), w[j] - 1};
    if (t.compare(cr, iv.right.x) < 0) iv.right = {cr, static_cast<int>(j), w[j]};
    if (t.compare(iv.left.x, iv.right.x) >= 0) return std::nullopt;
  }
  return iv;
}

bool is_recurrence_word(const IetMap& t, const Word& w) {
  if (w.empty()) return false;
  Word e = w;
  e.push_back(w[0]);
  return word_interval(t, e).has_value();
}

const char* to_string(IdocVerdict v) {
  switch (v) {
    case IdocVerdict::PassUpToN: return "PassUpToN";
    case IdocVerdict::FailWithCertificate: return "FailWithCertificate";
    case IdocVerdict::Unknown: return "Unknown";
  }
  return "?";
}

IdocReport idoc_heuristic(const IetMap& t, int n) {
  IdocReport rep;
  rep.horizon = n;
  int m = t.m();
  struct Pt {
    LinearForm x;
    int t, j;
  };
  std::vector<Pt> pts;
  for (int s = 1; s <= m - 1; ++s) {
    LinearForm x = t.beta(s);
    if (t.compare(x, t.total()) >= 0) {
      rep.verdict = IdocVerdict::FailWithCertificate;
      rep.t1 = rep.t2 = s;
      rep.detail = "breakpoint beta_" + std::to_string(s) + " lies outside the domain (zero-length end interval)";
      return rep;
    }
    for (int j = 0; j <= n; ++j) {
      pts.push_back({x, s, j});
      if (j < n) {
        try {
          x = t.apply_inv(x);
        } catch (const AmbiguousInterval& e) {
          rep.verdict = IdocVerdict::Unknown;
          rep.detail = e.what();
          return rep;
        }
      }
    }
  }
  auto fail = [&](const Pt& a, const Pt& b, const std::string& why) {
    rep.verdict = IdocVerdict::FailWithCertificate;
    rep.t1 = a.t;
    rep.j1 = a.j;
    rep.t2 = b.t;
    rep.j2 = b.j;
    rep.detail = why;
    return rep;
  };
  // Identical forms first: exact coincidences without any evaluation.
  {
    std::map<LinearForm, std::size_t> seen;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto [it, fresh] = seen.emplace(pts[i].x, i);
      if (!fresh) return fail(pts[it->second], pts[i], "identical orbit points");
    }
  }
  std::vector<LinearForm> forms;
  for (const auto& p : pts) forms.push_back(p.x);
  std::vector<FastEnclosure> fe;
  t.basis().fast_batch(forms, fe);
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fe[a].val - fe[a].err < fe[b].val - fe[b].err;
  });
  bool unknown = false;
  for (std::size_t a = 0; a < order.size(); ++a) {
    const auto& ea = fe[order[a]];
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const auto& eb = fe[order[b]];
      if (eb.val - eb.err > ea.val + ea.err) break;
      Sign s = t.basis().sign(pts[order[a]].x - pts[order[b]].x);
      if (s == Sign::Zero) return fail(pts[order[a]], pts[order[b]], "coinciding orbit points");
      if (s == Sign::Unknown) unknown = true;
    }
  }
  if (unknown) {
    rep.verdict = IdocVerdict::Unknown;
    rep.detail = "some orbit points not separated at max precision";
    return rep;
  }
  rep.verdict = IdocVerdict::PassUpToN;
  return rep;
}

}  // namespace ietk
