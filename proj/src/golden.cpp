#include "ietk/golden.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "ietk/errors.hpp"

namespace ietk::golden {

IntMatrix matrix_a() {
  return IntMatrix{{1, 1, 1, 1, 1}, {1, 2, 0, 0, 0}, {0, 0, 2, 3, 2}, {0, 0, 0, 2, 1}, {2, 3, 2, 2, 2}};
}

IntMatrix matrix_b() {
  return IntMatrix{{4, 6, 5, 8, 6}, {3, 5, 1, 1, 1}, {4, 6, 8, 16, 11}, {2, 3, 2, 6, 4}, {9, 14, 10, 16, 12}};
}

std::vector<Word> sigma_images() {
  return {parse_word("1525"), parse_word("152525"), parse_word("15335"), parse_word("15343435"), parse_word("153435")};
}

IntVector eigenvector_of_one() { return {-1, 1, -1, 1, -1}; }

RauzyPath loop() { return RauzyPath(tau_sym(5), kLoop); }

CertifiedReal theta_closed_form() {
  CertifiedReal r3 = sqrt(CertifiedReal(3));
  CertifiedReal s = sqrt(CertifiedReal(15) + CertifiedReal(8) * r3);
  CertifiedReal half(mpq_class(1, 2));
  return CertifiedReal(2) + half * r3 + half * s;
}

std::vector<CertifiedReal> eigenvector_closed_form() {
  CertifiedReal r3 = sqrt(CertifiedReal(3));
  CertifiedReal s = sqrt(CertifiedReal(15) + CertifiedReal(8) * r3);
  CertifiedReal half(mpq_class(1, 2)), three_halves(mpq_class(3, 2));
  return {r3,
          three_halves - r3 + s - half * r3 * s,
          CertifiedReal(-1) + three_halves * r3 - three_halves * s + r3 * s,
          CertifiedReal(1),
          half * r3 + half * s};
}

namespace {

const mpq_class kTolerance("1/1000000000000000000000000000000");  // 1e-30

// |a - b| < 1e-30 at the given precision; an enclosure too wide to tell is an
// ambiguity, not a failure.
bool agree(const CertifiedReal& a, const CertifiedReal& b, int bits) {
  Interval d = (a - b).at(bits);
  if (d.lo > -kTolerance && d.hi < kTolerance) return true;
  if (d.contains_zero())
    throw AmbiguousComparison("enclosure at " + std::to_string(bits) + " bits is too wide to certify 1e-30 agreement");
  return false;
}

}  // namespace

std::vector<Check> verify(const Options& opt) {
  std::vector<Check> out;
  int bits = std::min(opt.precision_bits, opt.max_bits);
  auto run = [&out](const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
    Check c{name, false, ""};
    try {
      auto [ok, detail] = f();
      c.passed = ok;
      c.detail = detail;
    } catch (const AmbiguousComparison& e) {
      c.detail = std::string("AmbiguousComparison: ") + e.what();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  };

  const IntMatrix a_lit = matrix_a();
  ComposedPath cp = compose_path(loop());
  IntMatrix a = cp.matrix;
  if (opt.tamper_matrix) a(0, 0) += 1;

  run("path matrix equals A", [&] { return std::make_pair(cp.matrix == a_lit, cp.matrix.to_string()); });
  run("path is closed at (5,4,3,2,1)", [&] { return std::make_pair(cp.end == tau_sym(5), cp.end.to_string()); });
  run("characteristic polynomial factors", [&] {
    auto f = factor_int_poly(char_poly(a));
    bool ok = f.size() == 2 && f[0] == IntPoly::from_high({1, -1}) && f[1] == IntPoly::from_high({1, -8, 15, -8, 1});
    std::string d;
    for (const auto& p : f) d += "(" + p.to_string() + ")";
    return std::make_pair(ok, d);
  });
  run("Perron root matches the closed form to 1e-30", [&] {
    PerronResult pr = perron(a, bits);
    return std::make_pair(agree(pr.theta, theta_closed_form(), bits), pr.theta.to_decimal(50));
  });
  run("Perron vector matches the closed-form eigenvector", [&] {
    PerronResult pr = perron(a, bits);
    auto lam = eigenvector_closed_form();
    CertifiedReal total(0);
    for (const auto& v : lam) total = total + v;
    bool ok = true;
    for (int i = 0; i < 5; ++i) ok = ok && agree(pr.vector[i], lam[i] / total, bits);
    return std::make_pair(ok, std::string());
  });
  run("A fixes (-1,1,-1,1,-1)", [&] {
    IntVector b = eigenvector_of_one();
    return std::make_pair(a * b == b, to_string(a * b));
  });
  run("B = A^2 and fixes (-1,1,-1,1,-1)", [&] {
    IntMatrix b2 = a * a;
    IntVector b = eigenvector_of_one();
    return std::make_pair(b2 == matrix_b() && b2 * b == b, b2.to_string());
  });
  run("nu(B) = 5", [&] {
    mpq_class v = nu(a * a);
    return std::make_pair(v == 5, v.get_str());
  });
  run("Rauzy class of (5,4,3,2,1) has 15 vertices", [&] {
    std::size_t n = rauzy_class(tau_sym(5)).size();
    return std::make_pair(n == 15, std::to_string(n));
  });

  // The dynamical checks share one self-similar IET.
  std::optional<PeriodicIet> p;
  run("path realised by its Perron lengths", [&] {
    p.emplace(periodic_iet_from_path(loop(), bits, opt.max_bits));
    return std::make_pair(true, "positive power " + std::to_string(p->positive_power));
  });
  if (!p) return out;
  std::optional<Substitution> s;
  run("substitution at depth 12", [&] {
    s.emplace(substitution_from_induction(p->iet, 12));
    std::string d;
    for (const auto& w : s->images()) d += to_string(w) + " ";
    return std::make_pair(s->images() == sigma_images(), d);
  });
  if (!s) return out;
  run("substitution matrix equals A", [&] { return std::make_pair(s->matrix() == a_lit, s->matrix().to_string()); });
  run("fixed point prefix matches u", [&] {
    Word lit = parse_word(kFixedPrefix);
    Word u = fixed_point_prefix(*s, 1, lit.size());
    return std::make_pair(u == lit, to_string(u));
  });
  run("orbit of 0 codes u", [&] {
    Word lit = parse_word(kFixedPrefix);
    Word c = code_orbit(p->iet, LinearForm::zero(p->iet.basis().dim()), static_cast<int>(lit.size()));
    return std::make_pair(c == lit, to_string(c));
  });
  Word w1 = s->apply(parse_word(kWord1)), w2 = s->apply(parse_word(kWord2));
  run("sigma(251534) is a recurrence word", [&] {
    return std::make_pair(is_recurrence_word(p->iet, w1), to_string(w1));
  });
  run("sigma(5153351) is a recurrence word", [&] {
    return std::make_pair(is_recurrence_word(p->iet, w2), to_string(w2));
  });
  run("l(w1) - l(w2) = b(S1) = (-1,1,-1,1,-1)", [&] {
    IntVector d = population(w1, 5) - population(w2, 5);
    auto sets = cyclic_sets(tau_sym(5));
    bool ok = d == eigenvector_of_one() && sets.size() == 2 && b_vector(sets[1], 5) == d;
    return std::make_pair(ok, to_string(d) + " S1=" + sets.at(1).to_string());
  });
  run("witness search within length 64", [&] {
    WitnessPair wp = find_witness_pair(*s, cyclic_sets(tau_sym(5)), 64);
    bool ok = is_recurrence_word(p->iet, wp.w1) && is_recurrence_word(p->iet, wp.w2) &&
              population(wp.w1, 5) - population(wp.w2, 5) == b_vector(wp.set, 5);
    return std::make_pair(ok, to_string(wp.w1) + " " + to_string(wp.w2) + " " + wp.set.to_string());
  });
  run("IDOC up to N=1000", [&] {
    IdocReport r = idoc_heuristic(p->iet, 1000);
    return std::make_pair(r.verdict == IdocVerdict::PassUpToN, std::string(to_string(r.verdict)));
  });
  return out;
}

}  // namespace ietk::golden
