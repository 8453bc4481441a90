#include <set>

#include "doctest.h"
#include "ietk/errors.hpp"
#include "ietk/golden.hpp"
#include "ietk/subst.hpp"

using namespace ietk;

namespace {

const PeriodicIet& golden_iet() {
  static const PeriodicIet p = periodic_iet_from_path(golden::loop());
  return p;
}

const Substitution& sigma() {
  static const Substitution s = substitution_from_induction(golden_iet().iet, 12);
  return s;
}

bool contains(const std::vector<Word>& ws, const Word& w) { return std::find(ws.begin(), ws.end(), w) != ws.end(); }

}  // namespace

TEST_CASE("substitution from twelve induction steps") {
  CHECK(sigma().images() == golden::sigma_images());
  for (int j = 1; j <= 5; ++j) CHECK(sigma().matrix().col(j - 1) == population(sigma().image(j), 5));
  CHECK(population(sigma().image(4), 5) == IntVector{1, 0, 3, 2, 2});
  CHECK(sigma().matrix() == golden::matrix_a());
  CHECK(substitution_from_induction(golden_iet().iet, 0) == Substitution::identity(5));
  // 24 steps give sigma^2
  CHECK(substitution_from_induction(golden_iet().iet, 24) == sigma().power(2));
}

TEST_CASE("fixed point prefixes") {
  CHECK(to_string(fixed_point_prefix(sigma(), 1, 22)) == "1525153435152525153435");
  CHECK(fixed_point_prefix(sigma(), 1, 59) == parse_word(golden::kFixedPrefix));
  CHECK(fixed_point_prefix(Substitution::identity(3), 1, 6) == Word(6, 1));
  CHECK_THROWS_AS(fixed_point_prefix(sigma(), 2, 10), NoFixedSeed);
}

TEST_CASE("symbol frequencies approach the Perron vector") {
  const std::size_t n = 10000;
  IntVector pop = population(fixed_point_prefix(sigma(), 1, n), 5);
  // l(sigma(w)) = M l(w), so frequencies follow the right eigenvector of M
  PerronResult pr = perron(sigma().matrix(), 128);
  for (int i = 0; i < 5; ++i) {
    double f = static_cast<double>(pop[i]) / static_cast<double>(n);
    CHECK(std::abs(f - pr.vector[i].approx()) < 0.01);
  }
}

TEST_CASE("language of the golden substitution") {
  auto l1 = language(sigma(), 1);
  CHECK(l1.size() == 5);
  auto l2 = language(sigma(), 2);
  CHECK(contains(l2, parse_word("15")));
  CHECK(contains(l2, parse_word("25")));
  CHECK(contains(l2, parse_word("52")));
  CHECK_FALSE(contains(l2, parse_word("11")));
  CHECK(contains(language(sigma(), 6), parse_word(golden::kWord1)));
  CHECK(contains(language(sigma(), 7), parse_word(golden::kWord2)));
  // every factor of a long fixed-point prefix is in the language, and
  // vice versa for k = 3 (the prefix is long enough to see them all)
  Word u = fixed_point_prefix(sigma(), 1, 20000);
  auto l3 = language(sigma(), 3);
  std::set<Word> seen;
  for (std::size_t i = 0; i + 3 <= u.size(); ++i) seen.insert(Word(u.begin() + i, u.begin() + i + 3));
  CHECK(seen == std::set<Word>(l3.begin(), l3.end()));
  // an IET language has (m - 1) k + 1 factors of length k at most
  for (int k = 1; k <= 8; ++k) CHECK(language(sigma(), k).size() <= static_cast<std::size_t>(4 * k + 1));
}

TEST_CASE("language factors have nonempty intervals") {
  const IetMap& t = golden_iet().iet;
  for (int k = 1; k <= 6; ++k)
    for (const auto& w : language(sigma(), k)) CHECK(word_interval(t, w));
}

TEST_CASE("aperiodicity check") {
  CHECK_NOTHROW(check_aperiodic(sigma()));
  Substitution periodic(2, {parse_word("12"), parse_word("12")});
  CHECK_THROWS_AS(check_aperiodic(periodic), ValidationError);
}

TEST_CASE("recurrence words of the golden substitution") {
  CHECK(recurrence_words(sigma(), 0).empty());
  Word w1 = sigma().apply(parse_word(golden::kWord1)), w2 = sigma().apply(parse_word(golden::kWord2));
  CHECK(w1.size() == 35);
  CHECK(w2.size() == 36);
  auto rw = recurrence_words(sigma(), 36);
  CHECK(contains(rw, w1));
  CHECK(contains(rw, w2));
  CHECK(std::is_sorted(rw.begin(), rw.end(), canonical_less));
  // sigma of any factor starts and continues with 1
  const IetMap& t = golden_iet().iet;
  for (int k = 1; k <= 3; ++k)
    for (const auto& w : language(sigma(), k)) CHECK(is_recurrence_word(t, sigma().apply(w)));
}

TEST_CASE("witness pairs") {
  IntVector b1{-1, 1, -1, 1, -1};
  CHECK(population(parse_word(golden::kWord1), 5) - population(parse_word(golden::kWord2), 5) == b1);
  CHECK(population(parse_word(golden::kWord1), 5) == IntVector{1, 1, 1, 1, 2});
  CHECK(population(parse_word(golden::kWord2), 5) == IntVector{2, 0, 2, 0, 3});
  CHECK(golden::matrix_a() * b1 == b1);
  Word w1 = sigma().apply(parse_word(golden::kWord1)), w2 = sigma().apply(parse_word(golden::kWord2));
  auto sets = cyclic_sets(tau_sym(5));
  CHECK(population(w1, 5) - population(w2, 5) == b_vector(sets[1], 5));

  // increasing-length search finds a shorter pair than sigma(251534), sigma(5153351)
  WitnessPair wp = find_witness_pair(sigma(), sets, 64);
  CHECK(std::max(wp.w1.size(), wp.w2.size()) <= 36);
  CHECK(population(wp.w1, 5) - population(wp.w2, 5) == wp.b);
  CHECK(std::find(sets.begin(), sets.end(), wp.set) != sets.end());
  CHECK(wp.b == b_vector(wp.set, 5));
  auto rw = recurrence_words(sigma(), 64);
  CHECK(contains(rw, wp.w1));
  CHECK(contains(rw, wp.w2));
  CHECK(is_recurrence_word(golden_iet().iet, wp.w1));
  CHECK(is_recurrence_word(golden_iet().iet, wp.w2));

  CHECK_THROWS_AS(find_witness_pair(sigma(), sets, 2), NotFound);
}

TEST_CASE("periodic IETs from closed paths") {
  const PeriodicIet& g = golden_iet();
  CHECK(g.positive_power == 2);
  CHECK(compare(g.perron.theta, CertifiedReal::parse("5.5519")) == Ordering::Greater);
  CHECK(compare(g.perron.theta, CertifiedReal::parse("5.5520")) == Ordering::Less);
  InductionRun run = induce(g.iet.pair(), 12);
  std::string labels;
  for (Label l : run.labels) labels += to_char(l);
  CHECK(labels == "bbaababaaaba");

  PeriodicIet two = periodic_iet_from_path(RauzyPath(Permutation({2, 1}), "ab"));
  CertifiedReal phi = (CertifiedReal(1) + sqrt(CertifiedReal(5))) / CertifiedReal(2);
  CHECK((two.perron.theta - phi * phi).at(256).contains_zero());
  CertifiedReal l1 = two.iet.basis().to_real(two.iet.length(1));
  CertifiedReal l2 = two.iet.basis().to_real(two.iet.length(2));
  bool ratio = (l1 - phi * l2).at(256).contains_zero() || (l2 - phi * l1).at(256).contains_zero();
  CHECK(ratio);

  CHECK_THROWS_AS(periodic_iet_from_path(RauzyPath(Permutation({2, 1}), "a")), NotPrimitive);
  CHECK_THROWS_AS(periodic_iet_from_path(RauzyPath(tau_sym(5), "ab")), ValidationError);
}

TEST_CASE("weak mixing report") {
  WeakMixingReport r = weak_mixing_certificate(golden::matrix_a());
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0] == IntPoly::from_high({1, -1}));
  CHECK(r.factors[1] == IntPoly::from_high({1, -8, 15, -8, 1}));
  CHECK(r.verdict == "not-evaluated");
  REQUIRE(r.quartics.size() == 1);
  // resolvent x^3 - 15x^2 + 60x - 68 = (x - 2)(x^2 - 13x + 34); its discriminant
  // p^2q^2 - 4q^3 - 4p^3r - 27r^2 + 18pqr = 4752 is the quartic's
  const QuarticGaloisData& q = r.quartics[0];
  CHECK(q.resolvent_cubic == IntPoly::from_high({1, -15, 60, -68}));
  CHECK(q.discriminant == 4752);
  CHECK_FALSE(q.discriminant_is_square);
  CHECK(q.galois_group == "D4");

  WeakMixingReport split = weak_mixing_certificate(IntMatrix{{2, 1}, {1, 2}});
  CHECK(split.factors.size() == 2);
  for (const auto& f : split.factors) CHECK(f.degree() == 1);
  CHECK(split.quartics.empty());
  CHECK_THROWS_AS(weak_mixing_certificate(IntMatrix::identity(3)), NotPrimitive);

  WeakMixingCriterion c{"has irreducible quartic", [](const WeakMixingReport& rep) { return !rep.quartics.empty(); }};
  CHECK(weak_mixing_certificate(golden::matrix_a(), c).verdict == "pass");

  CHECK(quartic_galois_data(IntPoly::from_high({1, 0, 0, 0, -2})).galois_group == "D4");
  CHECK(quartic_galois_data(IntPoly::from_high({1, 1, 1, 1, 1})).galois_group == "C4");
  CHECK(quartic_galois_data(IntPoly::from_high({1, 0, 0, 0, 1})).galois_group == "V4");
  // x^4 + x^2 + 1 = (x^2 + x + 1)(x^2 - x + 1)
  CHECK_THROWS_AS(quartic_galois_data(IntPoly::from_high({1, 0, 1, 0, 1})), ValidationError);
  CHECK(quartic_galois_data(IntPoly::from_high({1, 0, 0, 8, 12})).galois_group == "A4");
  CHECK(quartic_galois_data(IntPoly::from_high({1, 0, 0, 1, 1})).galois_group == "S4");
}
