#include "ietk/flow.hpp"

#include <algorithm>
#include <future>
#include <random>

#include "ietk/errors.hpp"

namespace ietk {

namespace {

constexpr int kCheckBits = 256;

bool overlaps(const CertifiedReal& a, const CertifiedReal& b) { return (a - b).at(kCheckBits).contains_zero(); }

bool at_most(const CertifiedReal& a, const CertifiedReal& b) {
  Ordering o = compare(a, b);
  return o == Ordering::Less || o == Ordering::Equal;
}

CertifiedReal abs_value(const LengthBasis& b, const LinearForm& f) {
  return b.to_real(definite_sign(b, f) < 0 ? -f : f);
}

const CertifiedReal& min_of(const CertifiedReal& a, const CertifiedReal& b) {
  return at_most(a, b) ? a : b;
}

LinearForm displacement_of(const IetMap& t, const Word& w) {
  LinearForm d = LinearForm::zero(t.basis().dim());
  for (int s : w) d = d + t.offset(s);
  return d;
}

WordInterval interval_or_throw(const IetMap& t, const Word& w) {
  auto iv = word_interval(t, w);
  if (!iv) throw ValidationError("extended witness word " + to_string(w) + " has an empty interval");
  return *iv;
}

}  // namespace

StepRoof::StepRoof(std::vector<CertifiedReal> heights) : h_(std::move(heights)) {
  if (h_.empty()) throw ValidationError("StepRoof: no heights");
  for (const auto& v : h_)
    if (compare(v, CertifiedReal(0)) != Ordering::Greater) throw ValidationError("StepRoof: heights must be positive");
}

StepRoof StepRoof::unit(int m) { return StepRoof(std::vector<CertifiedReal>(m, CertifiedReal(1))); }

CertifiedReal StepRoof::dot(const IntVector& v) const {
  if (v.size() != h_.size()) throw ValidationError("StepRoof::dot: size mismatch");
  CertifiedReal s(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s = s + CertifiedReal(mpq_class(v[i])) * h_[i];
  return s;
}

CertifiedReal birkhoff_sum(const IetMap& t, const StepRoof& f, std::int64_t n, const LinearForm& x) {
  if (f.m() != t.m()) throw ValidationError("birkhoff_sum: roof and map sizes differ");
  if (n == 0) return CertifiedReal(0);
  LinearForm y = x;
  if (n > 0) return f.dot(orbit_population(t, y, n));
  IntVector counts(t.m(), 0);
  for (std::int64_t k = 0; k < -n; ++k) {
    int i = t.locate_image(y);
    y = y - t.offset(i);
    ++counts[i - 1];
  }
  return -f.dot(counts);
}

FlowPoint flow_step(const IetMap& t, const StepRoof& f, const CertifiedReal& s, const FlowPoint& p) {
  if (f.m() != t.m()) throw ValidationError("flow_step: roof and map sizes differ");
  int bits = t.basis().max_bits();
  auto cmp = [bits](const CertifiedReal& a, const CertifiedReal& b) {
    Ordering o = compare(a, b, bits);
    if (o == Ordering::Ambiguous) throw AmbiguousInterval("flow_step: fiber coordinate on a roof boundary");
    return o;
  };
  const CertifiedReal zero(0);
  if (cmp(p.r, zero) == Ordering::Less || cmp(p.r, f.height(t.locate(p.x))) != Ordering::Less)
    throw ValidationError("flow_step: fiber coordinate outside [0, f(x))");
  CertifiedReal u = p.r + s;
  LinearForm x = p.x;
  if (cmp(u, zero) != Ordering::Less) {
    for (;;) {
      const CertifiedReal& fx = f.height(t.locate(x));
      if (cmp(u, fx) == Ordering::Less) break;
      u = u - fx;
      x = t.apply(x);
    }
  } else {
    while (cmp(u, zero) == Ordering::Less) {
      int i = t.locate_image(x);
      x = x - t.offset(i);
      u = u + f.height(i);
    }
  }
  return {std::move(x), std::move(u)};
}

std::int64_t q_value(const IntMatrix& a, const Word& w) { return sum(a * population(w, a.dim())); }

Word least_extension(const IetMap& t, const Word& prefix, std::size_t length) {
  if (!word_interval(t, prefix)) throw NotFound("least_extension: prefix " + to_string(prefix) + " is not in the language");
  Word w = prefix;
  while (w.size() < length) {
    bool grown = false;
    for (int s = 1; s <= t.m() && !grown; ++s) {
      w.push_back(s);
      if (word_interval(t, w))
        grown = true;
      else
        w.pop_back();
    }
    if (!grown) throw NotFound("least_extension: no continuation of " + to_string(w));
  }
  return w;
}

std::vector<TowerWord> prepare_tower_words(const IetMap& t, const Word& w1, const Word& w2) {
  if (w1.empty() || w2.empty()) throw ValidationError("prepare_tower_words: empty witness word");
  std::size_t k = std::max(w1.size(), w2.size()) + 1;
  std::vector<TowerWord> out;
  for (const Word* w : {&w1, &w2}) {
    Word ext = least_extension(t, concat(*w, Word{(*w)[0]}), k + 1);
    WordInterval iv = interval_or_throw(t, ext);
    out.push_back({*w, ext, t.basis().to_real(iv.right.x - iv.left.x)});
  }
  return out;
}

DepthView depth_view(const PeriodicIet& p, int depth) {
  const IetPair& pair = p.iet.pair();
  int m = pair.m();
  for (int i = 0; i < m; ++i)
    if (!(pair.lengths[i] == LinearForm::unit(pair.basis->dim(), i)))
      throw ValidationError("depth_view: lengths must be the basis values");
  InductionRun run = induce(pair, depth);
  if (!(run.end.perm == pair.perm)) throw ValidationError("depth_view: depth is not a whole number of loops");

  std::vector<CertifiedReal> values;
  for (const auto& l : run.end.lengths) values.push_back(pair.basis->to_real(l));
  // lambda = A rho, so r . lambda = 0 becomes (A^T r) . rho = 0.
  IntMatrix at = run.matrix.transpose();
  std::vector<IntVector> relations;
  for (const auto& r : pair.basis->relations()) relations.push_back(at * r);
  auto nb = std::make_shared<const LengthBasis>(std::move(values), std::move(relations), pair.basis->max_bits());

  std::vector<LinearForm> base_len, unit_len;
  for (int i = 0; i < m; ++i) {
    base_len.emplace_back(run.matrix.row(i));
    unit_len.push_back(LinearForm::unit(m, i));
  }
  IetMap base(IetPair(nb, std::move(base_len), pair.perm));
  IetMap induced(IetPair(nb, std::move(unit_len), run.end.perm));
  IntVector heights = run.matrix.column_sums();
  return DepthView{depth, std::move(run.matrix), std::move(heights), std::move(run.end), std::move(base),
                   std::move(induced)};
}

bool TowerDiagnostics::ok() const {
  if (!ratio_ok) return false;
  for (const auto& s : sets)
    if (!s.measure_ok || !s.displacement_ok || !s.boundary_ok) return false;
  return true;
}

namespace {

TowerDiagnostics diagnose_depth(const PeriodicIet& p, const std::vector<TowerWord>& words, int depth,
                                const CertifiedReal& alpha) {
  DepthView v = depth_view(p, depth);
  const LengthBasis& nb = v.base.basis();
  TowerDiagnostics d;
  d.depth = depth;
  d.heights = v.heights;
  d.alpha = alpha;
  d.rho_total = nb.to_real(v.induced.total());
  for (const auto& tw : words) {
    WordInterval iv = interval_or_throw(v.induced, tw.ext);
    int w0 = tw.w[0];
    TowerSet s;
    s.height = v.heights[w0 - 1];
    s.q = q_value(v.matrix, tw.w);
    s.left = iv.left.x;
    s.right = iv.right.x;
    s.interval_length = nb.to_real(s.right - s.left);
    s.measure = CertifiedReal(mpq_class(s.height)) * s.interval_length;
    s.measure_ok = at_most(alpha, s.measure);
    // T^q = T_(n)^K on I_r, and T^q commutes with the tower climb.
    s.displacement = displacement_of(v.induced, tw.w);
    s.displacement_abs = abs_value(nb, s.displacement);
    s.delta_w0_length = nb.to_real(v.induced.length(w0));
    s.displacement_ok = compare(s.displacement_abs, s.delta_w0_length) == Ordering::Less;
    // C sym-diff T^{-1}C has the measure of I sym-diff T^h I = I sym-diff (I + offset_{w0}).
    CertifiedReal shift = abs_value(nb, v.induced.offset(w0));
    s.boundary = CertifiedReal(2) * min_of(s.interval_length, shift);
    s.boundary_ok = at_most(s.boundary, CertifiedReal(2) * d.rho_total);
    d.sets.push_back(std::move(s));
  }
  return d;
}

}  // namespace

std::vector<TowerDiagnostics> tower_diagnostics(const PeriodicIet& p, const std::vector<TowerWord>& words,
                                                int periods) {
  if (words.size() != 2) throw ValidationError("tower_diagnostics: expected two witness words");
  int period = p.positive_power * static_cast<int>(p.path.size());
  mpq_class nu_b = nu(power(p.matrix, p.positive_power));
  CertifiedReal alpha =
      CertifiedReal(4) * min_of(words[0].theta, words[1].theta) / (CertifiedReal(5) * CertifiedReal(nu_b));
  CertifiedReal expected = CertifiedReal(1);
  for (int i = 0; i < p.positive_power; ++i) expected = expected / p.perron.theta;

  std::vector<std::future<TowerDiagnostics>> jobs;
  for (int k = 1; k <= periods; ++k)
    jobs.push_back(std::async(std::launch::async, diagnose_depth, std::cref(p), std::cref(words), k * period,
                              std::cref(alpha)));
  std::vector<TowerDiagnostics> out;
  for (auto& j : jobs) out.push_back(j.get());

  for (std::size_t k = 1; k < out.size(); ++k) {
    TowerDiagnostics& d = out[k];
    d.has_ratio = true;
    d.expected_ratio = expected;
    for (std::size_t r = 0; r < d.sets.size(); ++r) {
      d.displacement_ratio.push_back(d.sets[r].displacement_abs / out[k - 1].sets[r].displacement_abs);
      d.interval_ratio.push_back(d.sets[r].interval_length / out[k - 1].sets[r].interval_length);
      d.ratio_ok = d.ratio_ok && overlaps(d.displacement_ratio.back(), expected) &&
                   overlaps(d.interval_ratio.back(), expected);
    }
  }
  return out;
}

TowerPartition tower_partition_check(const PeriodicIet& p, int depth) {
  DepthView v = depth_view(p, depth);
  const IetMap& t = v.base;
  const LengthBasis& nb = t.basis();
  TowerPartition rep;
  rep.depth = depth;

  struct Level {
    LinearForm left, right;
  };
  std::vector<Level> levels;
  rep.first_return = true;
  for (int j = 1; j <= t.m(); ++j) {
    LinearForm x = v.induced.beta(j - 1);
    const LinearForm& len = v.induced.length(j);
    for (std::int64_t i = 0; i < v.heights[j - 1]; ++i) {
      if (i > 0 && t.compare(x, v.induced.total()) < 0) rep.first_return = false;
      int c = t.locate(x);
      // a level must be translated as a whole
      if (t.compare(x + len, t.beta(c)) > 0) rep.first_return = false;
      levels.push_back({x, x + len});
      x = x + t.offset(c);
    }
    if (t.compare(x, v.induced.total()) >= 0) rep.first_return = false;
  }
  rep.levels = static_cast<std::int64_t>(levels.size());

  std::sort(levels.begin(), levels.end(),
            [&t](const Level& a, const Level& b) { return t.compare(a.left, b.left) < 0; });
  rep.disjoint_fill = nb.provably_zero(levels.front().left) && nb.provably_zero(levels.back().right - t.total());
  for (std::size_t k = 0; k + 1 < levels.size() && rep.disjoint_fill; ++k)
    rep.disjoint_fill = nb.provably_zero(levels[k].right - levels[k + 1].left);

  const IetPair& orig = p.iet.pair();
  rep.total_identity = orig.basis->provably_zero(combine(v.heights, v.original_end.lengths) - orig.total());
  return rep;
}

bool CocycleReport::ok() const {
  if (!difference_ok) return false;
  for (const auto& s : samples)
    if (!s.matches || !s.returns) return false;
  return true;
}

CocycleReport cocycle_constancy_check(const PeriodicIet& p, const std::vector<TowerWord>& words,
                                      const StepRoof& h, int depth, int samples_per_word, std::uint64_t seed) {
  if (words.size() != 2) throw ValidationError("cocycle_constancy_check: expected two witness words");
  if (samples_per_word < 1) throw ValidationError("cocycle_constancy_check: need at least one sample");
  DepthView v = depth_view(p, depth);
  const LengthBasis& nb = v.base.basis();
  int m = v.base.m();
  std::mt19937_64 rng(seed);
  CocycleReport rep;
  rep.depth = depth;

  struct Job {
    int r;
    std::int64_t level;
    LinearForm point;
  };
  std::vector<Job> jobs;
  std::vector<IntVector> target;
  std::vector<LinearForm> disp;
  for (int r = 0; r < 2; ++r) {
    const TowerWord& tw = words[r];
    WordInterval iv = interval_or_throw(v.induced, tw.ext);
    target.push_back(v.matrix * population(tw.w, m));
    rep.q.push_back(sum(target.back()));
    rep.a.push_back(h.dot(target.back()));
    disp.push_back(displacement_of(v.induced, tw.w));
    std::int64_t height = v.heights[tw.w[0] - 1];
    std::uniform_int_distribution<std::int64_t> level(0, height - 1);
    std::int64_t n = samples_per_word + 1;
    for (int s = 0; s < samples_per_word; ++s) {
      LinearForm x = (n * iv.left.x + (s + 1) * (iv.right.x - iv.left.x)).divided(n);
      jobs.push_back({r, s == 0 ? 0 : level(rng), std::move(x)});
    }
  }

  auto run = [&](const Job& j) {
    CocycleSample cs;
    cs.r = j.r + 1;
    cs.level = j.level;
    LinearForm y = j.point;
    orbit_population(v.base, y, j.level);
    cs.point = y;
    cs.population = orbit_population(v.base, y, rep.q[j.r]);
    cs.birkhoff = h.dot(cs.population);
    cs.matches = cs.population == target[j.r] && overlaps(cs.birkhoff, rep.a[j.r]);
    cs.returns = nb.provably_zero(y - cs.point - disp[j.r]);
    return cs;
  };
  std::vector<std::future<CocycleSample>> futures;
  for (const auto& j : jobs) futures.push_back(std::async(std::launch::async, run, std::cref(j)));
  for (auto& f : futures) rep.samples.push_back(f.get());

  rep.difference = rep.a[0] - rep.a[1];
  rep.expected_difference = h.dot(population(words[0].w, m) - population(words[1].w, m));
  rep.difference_ok = overlaps(rep.difference, rep.expected_difference);
  return rep;
}

}  // namespace ietk
