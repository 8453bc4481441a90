#include "ietk/reduce.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ietk/errors.hpp"

namespace ietk {

namespace {

LinearForm padded(const LinearForm& f, std::size_t dim) {
  IntVector c = f.coef;
  c.resize(dim, 0);
  return LinearForm(std::move(c), f.den);
}

CertifiedReal abs_value(const LengthBasis& b, const LinearForm& f) {
  return b.to_real(definite_sign(b, f) < 0 ? -f : f);
}

bool strictly_below(const LengthBasis& b, const LinearForm& f, const mpq_class& bound) {
  return compare(abs_value(b, f), CertifiedReal(bound)) == Ordering::Less;
}

// The cyclic set S with b(S) = d, or with b(S) = -d (second = true).
std::optional<std::pair<CyclicSet, bool>> match_cyclic(const IntVector& d, const Permutation& p) {
  IntVector neg(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) neg[i] = -d[i];
  for (const auto& s : cyclic_sets(p))
    if (b_vector(s, p.size()) == d) return std::make_pair(s, false);
  for (const auto& s : cyclic_sets(p))
    if (b_vector(s, p.size()) == neg) return std::make_pair(s, true);
  return std::nullopt;
}

std::vector<int> first_primes(int n) {
  std::vector<int> ps;
  for (int c = 2; static_cast<int>(ps.size()) < n; ++c) {
    bool prime = true;
    for (int p : ps)
      if (c % p == 0) {
        prime = false;
        break;
      }
    if (prime) ps.push_back(c);
  }
  return ps;
}

Word recurrence_extension(const Word& w) { return concat(w, Word{w[0]}); }

std::string join_labels(const RauzyPath& p) { return p.label_string().empty() ? "(empty)" : p.label_string(); }

}  // namespace

PerturbationBudget perturbation_budget(const IetMap& t, int k) {
  if (k < 1) throw ValidationError("perturbation_budget: horizon must be positive");
  int m = t.m();
  struct Pt {
    LinearForm x;
    int cls;  // index of the first t with the same beta
  };
  PerturbationBudget b;
  b.k = k;
  std::vector<Pt> pts;
  std::vector<int> cls_of(m, -1);
  for (int s = 1; s <= m - 1; ++s) {
    if (t.compare(t.beta(s), t.total()) >= 0) continue;  // zero-length tail: beta_s = |lambda|
    cls_of[s] = s;
    for (int u = 1; u < s; ++u)
      if (cls_of[u] == u && t.compare(t.beta(u), t.beta(s)) == 0) {
        cls_of[s] = u;
        break;
      }
    if (cls_of[s] != s) {  // beta_s = beta_u, excluded from delta
      ++b.excluded_pairs;
      continue;
    }
    LinearForm fwd = t.beta(s), bwd = t.beta(s);
    pts.push_back({fwd, s});
    for (int j = 1; j <= k; ++j) {
      fwd = t.apply(fwd);
      bwd = t.apply_inv(bwd);
      pts.push_back({fwd, s});
      pts.push_back({bwd, s});
    }
  }
  std::sort(pts.begin(), pts.end(), [&t](const Pt& a, const Pt& b) { return t.compare(a.x, b.x) < 0; });

  std::optional<LinearForm> best;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    LinearForm gap = pts[i + 1].x - pts[i].x;
    bool zero = t.basis().provably_zero(gap);
    if (pts[i].cls == pts[i + 1].cls) {
      if (zero) ++b.excluded_pairs;
      continue;
    }
    if (zero)
      throw ValidationError("perturbation_budget: orbits of beta_" + std::to_string(pts[i].cls) + " and beta_" +
                            std::to_string(pts[i + 1].cls) + " meet within the horizon");
    if (!best || t.compare(gap, *best) < 0) best = gap;
  }
  if (!best) throw ValidationError("perturbation_budget: fewer than two distinct beta orbits");
  b.delta = t.basis().to_real(*best);
  mpq_class lo = b.delta.at(64).lo;
  if (sgn(lo) <= 0) throw AmbiguousComparison("perturbation_budget: delta not separated from 0");
  b.epsilon = floor_dyadic(lo / (20 * m * (2 * k + 4)), 96);
  if (sgn(b.epsilon) <= 0) b.epsilon = lo / (20 * m * (2 * k + 4));
  b.slack_ok = compare(CertifiedReal(mpq_class(10 * m * (2 * k + 4)) * b.epsilon), b.delta) == Ordering::Less;
  return b;
}

bool WitnessCertificate::verified() const {
  if (transcript.empty()) return false;
  return std::all_of(transcript.begin(), transcript.end(), [](const Check& c) { return c.passed; });
}

std::vector<Check> verify_certificate(const WitnessCertificate& c, int idoc_horizon) {
  std::vector<Check> out;
  const IetPair& pr = c.iet;
  int m = pr.m();
  out.push_back({"irreducible", is_irreducible(pr.perm), pr.perm.to_string()});
  bool positive = true;
  for (const auto& l : pr.lengths) positive = positive && pr.basis->sign(l) == Sign::Positive;
  out.push_back({"positive lengths", positive, ""});
  std::optional<IetMap> t;
  try {
    t.emplace(pr);
  } catch (const Error& e) {
    out.push_back({"iet", false, e.what()});
    return out;
  }
  for (const Word* w : {&c.w1, &c.w2}) {
    Check ch{"recurrence " + to_string(*w), false, ""};
    try {
      ch.passed = is_recurrence_word(*t, *w);
    } catch (const Error& e) {
      ch.detail = e.what();
    }
    out.push_back(ch);
  }
  auto sets = cyclic_sets(pr.perm);
  bool in_sigma = std::find(sets.begin(), sets.end(), c.set) != sets.end();
  out.push_back({"cyclic set", in_sigma && b_vector(c.set, m) == c.b, c.set.to_string() + " b=" + to_string(c.b)});
  IntVector d = population(c.w1, m) - population(c.w2, m);
  out.push_back({"population difference", d == c.b, to_string(d)});
  IdocReport idoc = idoc_heuristic(*t, idoc_horizon);
  out.push_back({"idoc", idoc.verdict == IdocVerdict::PassUpToN,
                 std::string(to_string(idoc.verdict)) + " N=" + std::to_string(idoc.horizon) +
                     (idoc.detail.empty() ? "" : " " + idoc.detail)});
  return out;
}

WitnessCertificate golden_certificate(int bits) {
  RauzyPath loop(tau_sym(5), "bbaababaaaba");
  PeriodicIet p = periodic_iet_from_path(loop, bits);
  Substitution s = substitution_from_induction(p.iet, static_cast<int>(loop.size()));
  WitnessCertificate c;
  c.iet = p.iet.pair();
  c.w1 = s.apply(parse_word("251534"));
  c.w2 = s.apply(parse_word("5153351"));
  c.b = population(c.w1, 5) - population(c.w2, 5);
  auto match = match_cyclic(c.b, c.iet.perm);
  if (!match || match->second) throw ValidationError("golden_certificate: difference is not b(S)");
  c.set = match->first;
  c.provenance = "self-similar IET of loop " + loop.label_string() + " at " + loop.start.to_string() +
                 "; words sigma(251534), sigma(5153351)";
  c.transcript = verify_certificate(c);
  return c;
}

LiftResult lift_witness(const WitnessCertificate& c, int dynamics_samples) {
  int m0 = c.iet.m();
  if (!(c.iet.perm == tau_sym(m0))) throw ValidationError("lift_witness: certificate is not at the symmetric permutation");
  int m = m0 + 2;
  std::size_t dim = c.iet.basis->dim();
  std::vector<LinearForm> lengths{LinearForm::zero(dim)};
  for (const auto& l : c.iet.lengths) lengths.push_back(l);
  lengths.push_back(LinearForm::zero(dim));

  LiftResult r;
  r.iet = IetPair(c.iet.basis, std::move(lengths), tau(m), true);
  r.w1 = shifted(c.w1, 1);
  r.w2 = shifted(c.w2, 1);
  auto lifted_pop = [m0](const Word& w) {
    IntVector p{0};
    for (auto v : population(w, m0)) p.push_back(v);
    p.push_back(0);
    return p;
  };
  r.population_identity =
      population(r.w1, m) == lifted_pop(c.w1) && population(r.w2, m) == lifted_pop(c.w2);
  r.difference = population(r.w1, m) - population(r.w2, m);
  if (auto match = match_cyclic(r.difference, r.iet.perm)) {
    r.matches_cyclic_set = true;
    r.set = match->first;
    if (match->second) {
      std::swap(r.w1, r.w2);
      r.difference = population(r.w1, m) - population(r.w2, m);
    }
  }

  IetMap lifted(r.iet), base(c.iet);
  r.dynamics_identity = true;
  for (int k = 0; k < dynamics_samples && r.dynamics_identity; ++k) {
    LinearForm x = ((2 * k + 1) * base.total()).divided(2 * dynamics_samples);
    try {
      int i = base.locate(x), j = lifted.locate(x);
      LinearForm y = base.apply(x), z = lifted.apply(x);
      if (j != i + 1 || !base.basis().provably_zero(y - z)) {
        r.dynamics_identity = false;
        std::ostringstream os;
        os << "sample " << k << ": base symbol " << i << " -> " << base.basis().to_real(y).to_decimal(12)
           << ", lifted symbol " << j << " -> " << base.basis().to_real(z).to_decimal(12);
        r.dynamics_detail = os.str();
      }
    } catch (const Error& e) {
      r.dynamics_identity = false;
      r.dynamics_detail = e.what();
    }
  }
  if (r.dynamics_identity) r.dynamics_detail = std::to_string(dynamics_samples) + " samples agree";
  return r;
}

PerturbationDraw draw_perturbation(const IetPair& base, const mpq_class& epsilon, std::uint64_t seed,
                                   std::uint64_t index) {
  if (sgn(epsilon) <= 0) throw ValidationError("draw_perturbation: epsilon must be positive");
  int m = base.m();
  std::size_t d = base.basis->dim();
  std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(sq);
  constexpr std::int64_t kScale = std::int64_t(1) << 30;
  std::uniform_int_distribution<std::int64_t> pick(-(kScale - 1), kScale - 1);

  std::vector<int> primes = first_primes(m);
  long root = 1;
  while (root * root < primes.back()) ++root;

  PerturbationDraw dr;
  dr.index = index;
  std::vector<CertifiedReal> values = base.basis->values();
  for (int i = 0; i < m; ++i) {
    std::int64_t v = 0;
    while (v == 0) v = pick(rng);
    dr.r.push_back(mpq_class(v, kScale));
    dr.r.back().canonicalize();
    mpq_class scale = epsilon * dr.r.back() / (2 * root);
    values.push_back(CertifiedReal(scale) * sqrt(CertifiedReal(primes[i])));
  }
  std::vector<IntVector> relations;
  for (auto rel : base.basis->relations()) {
    rel.resize(d + m, 0);
    relations.push_back(std::move(rel));
  }
  auto nb = std::make_shared<const LengthBasis>(std::move(values), std::move(relations), base.basis->max_bits());
  std::vector<LinearForm> lengths;
  for (int i = 0; i < m; ++i) {
    IntVector c(d + m, 0);
    for (int j = 0; j < m; ++j) c[d + j] = -1;
    c[d + i] += m;
    lengths.push_back(padded(base.lengths[i], d + m) + LinearForm(std::move(c), m));
  }
  dr.pair = IetPair(nb, std::move(lengths), base.perm);
  return dr;
}

namespace {

bool in_budget(const IetMap& t, const IetMap& te, const mpq_class& eps, std::string& why) {
  std::size_t dim = te.basis().dim();
  if (!te.basis().provably_zero(te.total() - padded(t.total(), dim))) {
    why = "total length changed";
    return false;
  }
  for (int i = 1; i <= t.m(); ++i) {
    if (te.basis().sign(te.length(i)) != Sign::Positive) {
      why = "length " + std::to_string(i) + " not positive";
      return false;
    }
    if (!strictly_below(te.basis(), te.length(i) - padded(t.length(i), dim), eps)) {
      why = "length " + std::to_string(i) + " moved by eps or more";
      return false;
    }
  }
  return true;
}

}  // namespace

PerturbationLemmaReport perturbation_lemma_check(const IetMap& t, const IetMap& te, const PerturbationBudget& budget,
                                                 const std::vector<Word>& ext) {
  PerturbationLemmaReport rep;
  const LengthBasis& eb = te.basis();
  std::size_t dim = eb.dim();
  auto up = [dim](const LinearForm& f) { return padded(f, dim); };
  int m = t.m(), k = budget.k;
  const mpq_class& eps = budget.epsilon;
  std::ostringstream why;

  std::string reason;
  rep.in_budget = in_budget(t, te, eps, reason);
  if (!rep.in_budget) why << reason << "; ";

  try {
    // T^{-j} beta_s for j <= K + 1 and T^j beta_s for j <= K, in both maps
    std::vector<std::vector<LinearForm>> back(m), back_e(m), fwd(m), fwd_e(m);
    for (int s = 0; s < m; ++s) {
      LinearForm x = t.beta(s), xe = te.beta(s);
      for (int j = 0; j <= k + 1; ++j) {
        back[s].push_back(x);
        back_e[s].push_back(xe);
        if (j <= k) {
          x = t.apply_inv(x);
          xe = te.apply_inv(xe);
        }
      }
      x = t.beta(s);
      xe = te.beta(s);
      for (int j = 0; j <= k; ++j) {
        fwd[s].push_back(x);
        fwd_e[s].push_back(xe);
        if (j < k) {
          x = t.apply(x);
          xe = te.apply(xe);
        }
      }
    }

    struct Ix {
      int s, j;
    };
    std::vector<Ix> idx;
    for (int s = 0; s < m; ++s)
      for (int j = 0; j <= k; ++j) idx.push_back({s, j});
    std::sort(idx.begin(), idx.end(),
              [&](const Ix& a, const Ix& b) { return t.compare(back[a.s][a.j], back[b.s][b.j]) < 0; });
    rep.order_preserved = true;
    for (std::size_t i = 0; i + 1 < idx.size() && rep.order_preserved; ++i) {
      const Ix &a = idx[i], &b = idx[i + 1];
      if (t.compare(back[a.s][a.j], back[b.s][b.j]) != te.compare(back_e[a.s][a.j], back_e[b.s][b.j])) {
        rep.order_preserved = false;
        why << "order flips between T^-" << a.j << " beta_" << a.s << " and T^-" << b.j << " beta_" << b.s << "; ";
      }
    }

    // |T^{-s+1} beta_t - T_eps^{-s+1} beta^eps_t| < m(2s+1) eps for s <= K + 1, so the
    // backward step j = s - 1 >= 0 gets m(2j+3) eps; forward steps get m(2j+1) eps.
    rep.displacement_bounds = true;
    for (int s = 0; s < m && rep.displacement_bounds; ++s) {
      for (int j = 0; j <= k + 1 && rep.displacement_bounds; ++j) {
        mpq_class bound = mpq_class(m * (2 * j + 3)) * eps;
        if (!strictly_below(eb, up(back[s][j]) - back_e[s][j], bound) ||
            t.locate(back[s][j]) != te.locate(back_e[s][j])) {
          rep.displacement_bounds = false;
          why << "backward bound fails at beta_" << s << ", step " << j << "; ";
        }
      }
      for (int j = 0; j <= k && rep.displacement_bounds; ++j) {
        mpq_class bound = mpq_class(m * (2 * j + 1)) * eps;
        if (!strictly_below(eb, up(fwd[s][j]) - fwd_e[s][j], bound) || t.locate(fwd[s][j]) != te.locate(fwd_e[s][j])) {
          rep.displacement_bounds = false;
          why << "forward bound fails at beta_" << s << ", step " << j << "; ";
        }
      }
    }
  } catch (const Error& e) {
    why << e.what() << "; ";
    rep.order_preserved = rep.displacement_bounds = false;
  }

  rep.interval_bounds = rep.containment = true;
  for (const auto& w : ext) {
    auto iv = word_interval(t, w);
    if (!iv) {
      rep.interval_bounds = rep.containment = false;
      why << "word " << to_string(w) << " not in the language; ";
      continue;
    }
    auto endpoint = [&](const Endpoint& e) {
      LinearForm shift = LinearForm::zero(dim);
      for (int i = 0; i < e.j; ++i) shift = shift + te.offset(w[i]);
      return te.beta(e.t) - shift;
    };
    LinearForm le = endpoint(iv->left), re = endpoint(iv->right);
    LinearForm len = up(iv->right.x - iv->left.x);
    Sign s = eb.sign((re - le) - (4 * len).divided(5));
    if (s != Sign::Positive && s != Sign::Zero) {
      rep.interval_bounds = false;
      why << "|I^eps| < 4/5 |I| for " << to_string(w) << "; ";
    }
    auto ive = word_interval(te, w);
    if (!ive || te.compare(ive->left.x, le) > 0 || te.compare(re, ive->right.x) > 0) {
      rep.containment = false;
      why << "I^eps not contained for " << to_string(w) << "; ";
    }
  }
  rep.detail = why.str();
  return rep;
}

WitnessCertificate perturb_and_verify(const IetPair& lifted, const Word& w1, const Word& w2,
                                      const PerturbationBudget& budget, std::uint64_t seed, int max_draws,
                                      int idoc_horizon) {
  IetMap base(lifted);
  int m = lifted.m();
  IntVector diff = population(w1, m) - population(w2, m);
  auto match = match_cyclic(diff, lifted.perm);
  if (!match || match->second) throw ValidationError("perturb_and_verify: word difference is not b(S)");

  struct Outcome {
    std::optional<WitnessCertificate> cert;
    std::string reason;
  };
  auto attempt = [&](std::uint64_t index) -> Outcome {
    PerturbationDraw dr;
    try {
      dr = draw_perturbation(lifted, budget.epsilon, seed, index);
    } catch (const ValidationError&) {
      return {std::nullopt, "nonpositive"};
    }
    try {
      IetMap te(dr.pair);
      std::string why;
      if (!in_budget(base, te, budget.epsilon, why)) return {std::nullopt, "budget"};
      if (!is_recurrence_word(te, w1) || !is_recurrence_word(te, w2)) return {std::nullopt, "recurrence"};
      WitnessCertificate c;
      c.iet = dr.pair;
      c.w1 = w1;
      c.w2 = w2;
      c.set = match->first;
      c.b = diff;
      std::ostringstream prov;
      prov << "perturbation seed " << seed << " draw " << index << " eps " << budget.epsilon.get_str() << " r = (";
      for (std::size_t i = 0; i < dr.r.size(); ++i) prov << (i ? "," : "") << dr.r[i].get_str();
      prov << ")";
      c.provenance = prov.str();
      c.transcript.push_back({"within budget", true, "eps " + to_decimal(budget.epsilon, 12)});
      for (auto& ch : verify_certificate(c, idoc_horizon)) c.transcript.push_back(std::move(ch));
      if (!c.verified()) return {std::nullopt, "verification"};
      return {std::move(c), ""};
    } catch (const Error& e) {
      return {std::nullopt, "ambiguous"};
    }
  };

  std::map<std::string, int> failures;
  int batch = std::max(1u, std::thread::hardware_concurrency());
  for (int start = 0; start < max_draws; start += batch) {
    std::vector<std::future<Outcome>> jobs;
    for (int i = start; i < std::min(max_draws, start + batch); ++i)
      jobs.push_back(std::async(std::launch::async, attempt, static_cast<std::uint64_t>(i)));
    std::vector<Outcome> outs;
    for (auto& j : jobs) outs.push_back(j.get());
    for (auto& o : outs) {
      if (o.cert) return std::move(*o.cert);
      ++failures[o.reason];
    }
  }
  std::ostringstream os;
  os << "perturb_and_verify: no draw out of " << max_draws << " verified (";
  bool first = true;
  for (const auto& [k, v] : failures) {
    os << (first ? "" : ", ") << k << " " << v;
    first = false;
  }
  os << ")";
  throw SearchExhausted(os.str());
}

WitnessCertificate transfer_to_symmetric(const WitnessCertificate& c, int max_steps, int idoc_horizon) {
  int m = c.iet.m();
  Permutation sym = tau_sym(m);
  if (c.iet.perm == sym) return c;
  RauzyClass cls(sym);
  if (!cls.contains(c.iet.perm)) throw ValidationError("transfer_to_symmetric: permutation not in the class of tau_sym");
  std::vector<Label> p0 = cls.shortest_path(sym, c.iet.perm);
  auto loops = find_closed_primitive_paths(sym, std::max(0, std::min(max_steps - static_cast<int>(p0.size()), 2 * m + 10)), 1);

  IetMap end(c.iet);
  std::vector<std::string> tried;
  for (int j = 0;; ++j) {
    RauzyPath path(sym, std::vector<Label>{});
    if (j > 0) {
      if (loops.empty()) break;
      path = loops[0].repeated(j);
    }
    path.labels.insert(path.labels.end(), p0.begin(), p0.end());
    if (static_cast<int>(path.size()) > max_steps) break;
    ComposedPath cp = compose_path(path);

    std::vector<LinearForm> rho;
    for (int i = 0; i < m; ++i) rho.push_back(combine(cp.matrix.row(i), c.iet.lengths));
    try {
      IetPair start(c.iet.basis, rho, sym);
      InductionRun run = induce(start, static_cast<int>(path.size()));
      bool replay = run.labels == path.labels && run.end.perm == c.iet.perm;
      for (int i = 0; i < m && replay; ++i) replay = start.basis->provably_zero(run.end.lengths[i] - c.iet.lengths[i]);
      if (!replay) {
        tried.push_back(path.label_string() + ": replay mismatch");
        continue;
      }
      IetMap t(start);
      std::vector<Word> words;
      for (const Word* w : {&c.w1, &c.w2}) {
        auto iv = word_interval(end, recurrence_extension(*w));
        if (!iv) throw ValidationError("transfer_to_symmetric: certificate word is not a recurrence word");
        LinearForm x = (iv->left.x + iv->right.x).divided(2);
        IntVector target = cp.matrix * population(*w, m);
        Word v = code_orbit(t, x, static_cast<int>(sum(target)));
        if (population(v, m) != target) throw ValidationError("transfer_to_symmetric: population is not A l(w)");
        words.push_back(std::move(v));
      }
      WitnessCertificate out;
      out.iet = start;
      out.w1 = words[0];
      out.w2 = words[1];
      out.b = population(out.w1, m) - population(out.w2, m);
      auto match = match_cyclic(out.b, sym);
      if (!match) {
        tried.push_back(path.label_string() + ": difference " + to_string(out.b) + " is not b(S)");
        continue;
      }
      if (match->second) {
        std::swap(out.w1, out.w2);
        out.b = population(out.w1, m) - population(out.w2, m);
      }
      out.set = match->first;
      out.provenance = c.provenance + "; transferred along " + join_labels(path) + " from " + sym.to_string();
      out.transcript = verify_certificate(out, idoc_horizon);
      if (out.verified()) return out;
      tried.push_back(path.label_string() + ": verification failed");
    } catch (const Error& e) {
      tried.push_back(path.label_string() + ": " + e.what());
    }
  }
  std::string msg = "transfer_to_symmetric: no path within " + std::to_string(max_steps) + " steps";
  for (const auto& s : tried) msg += "; " + s;
  throw SearchExhausted(msg);
}

RauzyPath first_closed_primitive_path(const Permutation& p, int max_len) {
  for (int len = 1; len <= max_len; ++len) {
    auto v = find_closed_primitive_paths(p, len, 1);
    if (!v.empty()) return v[0];
  }
  throw NotFound("no closed primitive path at " + p.to_string() + " up to length " + std::to_string(max_len));
}

WitnessCertificate periodic_seed(const Permutation& p, int path_max_len, int witness_max_len, int bits) {
  int m = p.size();
  std::set<std::string> tried;
  std::vector<std::string> notes;
  for (int len = 1; len <= path_max_len; ++len) {
    auto paths = find_closed_primitive_paths(p, len, 16);
    for (const auto& path : paths) {
      if (!tried.insert(path.label_string()).second) continue;
      try {
        PeriodicIet pi = periodic_iet_from_path(path, bits);
        Substitution s = substitution_from_induction(pi.iet, static_cast<int>(path.size()));
        WitnessPair wp = find_witness_pair(s, cyclic_sets(p), witness_max_len);
        WitnessCertificate c;
        c.iet = pi.iet.pair();
        c.w1 = wp.w1;
        c.w2 = wp.w2;
        c.set = wp.set;
        c.b = wp.b;
        c.provenance = "self-similar IET of loop " + path.label_string() + " at " + p.to_string();
        c.transcript = verify_certificate(c);
        if (c.verified()) return c;
        notes.push_back(path.label_string() + ": verification failed");
      } catch (const Error& e) {
        notes.push_back(path.label_string() + ": " + e.what());
      }
    }
  }
  std::string msg = "periodic_seed: no witness at " + p.to_string() + " (m=" + std::to_string(m) + ")";
  for (const auto& n : notes) msg += "; " + n;
  throw SearchExhausted(msg);
}

WitnessCertificate full_reduction(int m, const ReductionOptions& opt) {
  if (m < 5 || m % 2 == 0 || m > opt.max_m)
    throw BadSize("full_reduction: m must be odd with 5 <= m <= " + std::to_string(opt.max_m));
  if (m == 5) {
    WitnessCertificate c = golden_certificate(opt.bits);
    c.stages.push_back({"base m=5", c.verified(), c.provenance});
    return c;
  }

  WitnessCertificate base = full_reduction(m - 2, opt);
  std::vector<Check> stages = base.stages;
  std::string tag = "m=" + std::to_string(m) + " ";

  LiftResult lift = lift_witness(base);
  stages.push_back({tag + "lift population identity", lift.population_identity, ""});
  stages.push_back({tag + "lift difference is b(Q)", lift.matches_cyclic_set,
                    lift.set.to_string() + " " + to_string(lift.difference)});
  stages.push_back({tag + "lift dynamics identity", lift.dynamics_identity, lift.dynamics_detail});

  std::optional<WitnessCertificate> at_tau;
  int horizon = static_cast<int>(std::max(lift.w1.size(), lift.w2.size())) + 1;
  try {
    if (!lift.matches_cyclic_set) throw ValidationError("lifted difference is not b(Q)");
    PerturbationBudget b = perturbation_budget(IetMap(lift.iet), horizon);
    at_tau = perturb_and_verify(lift.iet, lift.w1, lift.w2, b, opt.seed, opt.lifted_draws, opt.idoc_horizon);
    stages.push_back({tag + "perturb lifted witness", true, at_tau->provenance});
  } catch (const Error& e) {
    stages.push_back({tag + "perturb lifted witness", false, e.what()});
  }

  if (!at_tau) {
    // repair: seed the witness at tau_m from a self-similar IET
    WitnessCertificate seed = periodic_seed(tau(m), opt.path_max_len, opt.witness_max_len, opt.bits);
    stages.push_back({tag + "periodic seed at tau_m", seed.verified(), seed.provenance});
    int k = static_cast<int>(std::max(seed.w1.size(), seed.w2.size())) + 1;
    PerturbationBudget b = perturbation_budget(IetMap(seed.iet), k);
    stages.push_back({tag + "perturbation budget", b.slack_ok,
                      "K=" + std::to_string(k) + " delta=" + b.delta.to_decimal(8) + " eps=" + to_decimal(b.epsilon, 12)});
    at_tau = perturb_and_verify(seed.iet, seed.w1, seed.w2, b, opt.seed, opt.max_draws, opt.idoc_horizon);
    stages.push_back({tag + "perturb and verify", at_tau->verified(), at_tau->provenance});
  }

  WitnessCertificate out;
  try {
    out = transfer_to_symmetric(*at_tau, opt.transfer_max_steps, opt.idoc_horizon);
    stages.push_back({tag + "transfer to symmetric", out.verified(), out.provenance});
  } catch (const SearchExhausted& e) {
    stages.push_back({tag + "transfer to symmetric", false, e.what()});
    out = periodic_seed(tau_sym(m), opt.path_max_len, opt.witness_max_len, opt.bits);
    stages.push_back({tag + "direct seed at tau_sym", out.verified(), out.provenance});
  }
  out.stages = std::move(stages);
  return out;
}

}  // namespace ietk
