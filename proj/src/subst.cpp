#include "ietk/subst.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ietk/errors.hpp"

namespace ietk {

Substitution::Substitution(int m, std::vector<Word> images) : m_(m), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != m_) throw ValidationError("substitution: need one image per symbol");
  for (const auto& w : images_) {
    if (w.empty()) throw ValidationError("substitution: empty image");
    for (int s : w)
      if (s < 1 || s > m_) throw ValidationError("substitution: symbol out of range");
  }
}

Substitution Substitution::identity(int m) {
  std::vector<Word> im;
  for (int i = 1; i <= m; ++i) im.push_back({i});
  return Substitution(m, std::move(im));
}

IntMatrix Substitution::matrix() const {
  IntMatrix a(m_);
  for (int j = 1; j <= m_; ++j)
    for (int s : images_[j - 1]) a(s - 1, j - 1) += 1;
  return a;
}

Word Substitution::apply(const Word& w) const {
  Word r;
  for (int s : w) r.insert(r.end(), images_[s - 1].begin(), images_[s - 1].end());
  return r;
}

Substitution Substitution::power(int k) const {
  Substitution r = identity(m_);
  for (int i = 0; i < k; ++i) {
    std::vector<Word> im;
    for (const auto& w : r.images_) im.push_back(apply(w));
    r.images_ = std::move(im);
  }
  return r;
}

Substitution substitution_from_induction(const IetMap& t, int n) {
  InductionRun run = induce(t.pair(), n);
  int m = t.m();
  LinearForm bound = run.end.total();
  std::vector<Word> im;
  LinearForm left = LinearForm::zero(t.basis().dim());
  for (int i = 1; i <= m; ++i) {
    Word w;
    LinearForm x = left;
    do {
      int s = t.locate(x);
      w.push_back(s);
      x = x + t.offset(s);
    } while (t.compare(x, bound) >= 0);
    im.push_back(std::move(w));
    left = left + run.end.lengths[i - 1];
  }
  return Substitution(m, std::move(im));
}

Word fixed_point_prefix(const Substitution& s, int seed, std::size_t length) {
  for (int k = 1; k <= s.m(); ++k) {
    Substitution p = s.power(k);
    const Word& img = p.image(seed);
    if (img[0] != seed) continue;
    if (img.size() == 1) {
      // sigma^k(seed) = seed: the constant extension is the only fixed point
      // starting with seed that we can report.
      return Word(length, seed);
    }
    Word u{seed};
    while (u.size() < length) u = p.apply(u);
    u.resize(length);
    return u;
  }
  throw NoFixedSeed("no power sigma^k, k <= m, maps the seed to a word starting with it");
}

namespace {

using WordSet = std::set<Word>;

WordSet two_factors(const Substitution& s) {
  WordSet f, frontier;
  auto add_factors = [&](const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Word x{w[i], w[i + 1]};
      if (f.insert(x).second) frontier.insert(x);
    }
  };
  for (const auto& im : s.images()) add_factors(im);
  while (!frontier.empty()) {
    WordSet cur;
    cur.swap(frontier);
    for (const auto& x : cur) add_factors(s.apply(x));
  }
  return f;
}

}  // namespace

std::vector<Word> language(const Substitution& s, int k) {
  if (!s.is_primitive()) throw ValidationError("language: substitution is not primitive");
  if (k <= 0) return {Word{}};
  WordSet l2 = two_factors(s);
  WordSet out;
  if (k == 1) {
    for (const auto& x : l2) {
      out.insert(Word{x[0]});
      out.insert(Word{x[1]});
    }
    return {out.begin(), out.end()};
  }
  if (k == 2) return {l2.begin(), l2.end()};
  // Blocks sigma^j(c) of length >= k-1: any k-window meets at most two blocks.
  Substitution p = s;
  auto min_len = [](const Substitution& t) {
    std::size_t mn = t.image(1).size();
    for (const auto& w : t.images()) mn = std::min(mn, w.size());
    return mn;
  };
  while (min_len(p) < static_cast<std::size_t>(k - 1)) p = Substitution(s.m(), [&] {
    std::vector<Word> im;
    for (const auto& w : p.images()) im.push_back(s.apply(w));
    return im;
  }());
  for (const auto& x : l2) {
    Word w = p.apply(x);
    for (std::size_t i = 0; i + k <= w.size(); ++i) out.insert(Word(w.begin() + i, w.begin() + i + k));
  }
  return {out.begin(), out.end()};
}

void check_aperiodic(const Substitution& s, std::size_t window) {
  Word u;
  for (int seed = 1; seed <= s.m(); ++seed) {
    try {
      u = fixed_point_prefix(s, seed, window);
      break;
    } catch (const NoFixedSeed&) {
    }
  }
  if (u.empty()) throw NoFixedSeed("check_aperiodic: no fixed point seed");
  std::size_t half = window / 2;
  for (std::size_t p = 1; p <= window / 4; ++p) {
    bool periodic = true;
    for (std::size_t i = half; i + p < window && periodic; ++i) periodic = u[i] == u[i + p];
    if (periodic)
      throw ValidationError("fixed point looks eventually periodic with period " + std::to_string(p));
  }
}

std::vector<Word> recurrence_words(const Substitution& s, int max_len) {
  std::vector<Word> out;
  if (max_len <= 0) return out;
  // Factors are right-extendable, so every shorter factor is a prefix of a
  // factor of length max_len + 1.
  auto big = language(s, max_len + 1);
  for (int n = 1; n <= max_len; ++n) {
    std::set<Word> ext, cur;
    for (const auto& w : big) {
      ext.insert(Word(w.begin(), w.begin() + n + 1));
      cur.insert(Word(w.begin(), w.begin() + n));
    }
    for (const auto& w : cur) {
      Word e = w;
      e.push_back(w[0]);
      if (ext.count(e)) out.push_back(w);
    }
  }
  return out;
}

WitnessPair find_witness_pair(const Substitution& s, const std::vector<CyclicSet>& sets, int max_len) {
  check_aperiodic(s);
  int m = s.m();
  std::vector<IntVector> bs;
  for (const auto& S : sets) bs.push_back(b_vector(S, m));
  std::map<IntVector, Word> index;
  for (const auto& w : recurrence_words(s, max_len)) {
    IntVector l = population(w, m);
    for (std::size_t k = 0; k < sets.size(); ++k) {
      auto it = index.find(l - bs[k]);
      if (it != index.end()) return {w, it->second, sets[k], bs[k]};
      it = index.find(l + bs[k]);
      if (it != index.end()) return {it->second, w, sets[k], bs[k]};
    }
    index.emplace(l, w);
  }
  throw NotFound("no witness pair among recurrence words up to length " + std::to_string(max_len));
}

PeriodicIet periodic_iet_from_path(const RauzyPath& path, int bits, int max_bits) {
  ComposedPath c = compose_path(path);
  if (!(c.end == path.start)) throw ValidationError("periodic_iet_from_path: path is not closed");
  if (!is_primitive(c.matrix)) throw NotPrimitive("periodic_iet_from_path: path matrix is not primitive");
  PerronResult pr = perron(c.matrix, bits);
  IetPair pair = make_iet(pr.vector, path.start, pr.relations, max_bits);

  InductionRun run;
  try {
    run = induce(pair, static_cast<int>(path.size()));
  } catch (const AmbiguousComparison& e) {
    throw PathNotRealizable(std::string("replay: ") + e.what());
  }
  if (run.labels != path.labels) throw PathNotRealizable("replay labels differ from the path");
  if (!(run.end.perm == path.start)) throw PathNotRealizable("replay does not return to the start permutation");
  for (int i = 0; i < pair.m(); ++i) {
    CertifiedReal d = pair.basis->to_real(run.end.lengths[i]) * pr.theta - pr.vector[i];
    if (!d.at(std::min(bits, max_bits)).contains_zero()) throw PathNotRealizable("replayed lengths are not theta^-1 lambda");
  }
  int k = 1;
  IntMatrix pw = c.matrix;
  while (!pw.all_positive()) {
    pw = pw * c.matrix;
    ++k;
  }
  return PeriodicIet{path, c.matrix, k, std::move(pr), IetMap(std::move(pair))};
}

namespace {

bool is_square(const mpz_class& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()); }

// x^2 + p x + q splits over Q(sqrt(delta)), delta not a rational square.
bool splits_over(const mpz_class& p, const mpz_class& q, const mpz_class& delta) {
  mpz_class d = p * p - 4 * q;
  return d == 0 || is_square(d) || is_square(d * delta);
}

}  // namespace

QuarticGaloisData quartic_galois_data(const IntPoly& f) {
  if (f.degree() != 4) throw ValidationError("quartic_galois_data: degree must be 4");
  if (factor_int_poly(f).size() != 1) throw ValidationError("quartic_galois_data: quartic is reducible");
  QuarticGaloisData g;
  g.quartic = f;
  // Monic transform l^3 f(y / l).
  mpz_class l = f.lead();
  mpz_class a = f.coeff(3), b = f.coeff(2) * l, c = f.coeff(1) * l * l, d = f.coeff(0) * l * l * l;
  // Resolvent cubic with roots x1x2 + x3x4 etc.
  g.resolvent_cubic = IntPoly({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, mpz_class(1)});
  const IntPoly& r = g.resolvent_cubic;
  mpz_class p2 = r.coeff(2), p1 = r.coeff(1), p0 = r.coeff(0);
  g.discriminant = p2 * p2 * p1 * p1 - 4 * p1 * p1 * p1 - 4 * p2 * p2 * p2 * p0 - 27 * p0 * p0 + 18 * p2 * p1 * p0;
  g.discriminant_is_square = is_square(g.discriminant);
  g.resolvent_factors = factor_int_poly(r);
  std::vector<mpz_class> roots;
  for (const auto& h : g.resolvent_factors)
    if (h.degree() == 1 && h.lead() == 1) roots.push_back(-h.coeff(0));
  // Kappe-Warren classification, valid for irreducible quartics.
  if (roots.empty())
    g.galois_group = g.discriminant_is_square ? "A4" : "S4";
  else if (roots.size() >= 3)
    g.galois_group = "V4";
  else {
    mpz_class t = roots[0];
    bool c4 = splits_over(-t, d, g.discriminant) && splits_over(a, b - t, g.discriminant);
    g.galois_group = c4 ? "C4" : "D4";
  }
  return g;
}

WeakMixingReport weak_mixing_certificate(const IntMatrix& a, const WeakMixingCriterion& criterion) {
  if (!is_primitive(a)) throw NotPrimitive("weak_mixing_certificate: matrix is not primitive");
  WeakMixingReport rep;
  rep.char_poly = char_poly(a);
  rep.factors = factor_int_poly(rep.char_poly);
  for (const auto& f : rep.factors)
    if (f.degree() == 4) rep.quartics.push_back(quartic_galois_data(f));
  rep.criterion = criterion.name;
  if (!criterion.test)
    rep.verdict = "not-evaluated";
  else
    rep.verdict = criterion.test(rep) ? "pass" : "fail";
  return rep;
}

}  // namespace ietk
