#include <random>

#include "doctest.h"
#include "ietk/errors.hpp"
#include "ietk/flow.hpp"
#include "ietk/golden.hpp"

using namespace ietk;

namespace {

const PeriodicIet& golden_iet() {
  static const PeriodicIet p = periodic_iet_from_path(golden::loop());
  return p;
}

const std::vector<TowerWord>& golden_words() {
  static const std::vector<TowerWord> w = [] {
    Substitution s = substitution_from_induction(golden_iet().iet, 12);
    return prepare_tower_words(golden_iet().iet, s.apply(parse_word(golden::kWord1)),
                               s.apply(parse_word(golden::kWord2)));
  }();
  return w;
}

// points (beta_{i-1} + k (beta_i - beta_{i-1}) / n) spread over every interval
std::vector<LinearForm> sample_points(const IetMap& t, int per_interval) {
  std::vector<LinearForm> pts;
  for (int i = 1; i <= t.m(); ++i)
    for (int k = 0; k < per_interval; ++k)
      pts.push_back(t.beta(i - 1) + ((2 * k + 1) * t.length(i)).divided(2 * per_interval));
  return pts;
}

bool same(const CertifiedReal& a, const CertifiedReal& b) { return (a - b).at(256).contains_zero(); }

StepRoof uneven_roof() {
  return StepRoof({CertifiedReal(mpq_class(1, 2)), sqrt(CertifiedReal(2)), CertifiedReal(3),
                   CertifiedReal(mpq_class(5, 7)), sqrt(CertifiedReal(3))});
}

}  // namespace

TEST_CASE("roofs must be positive") {
  CHECK_THROWS_AS(StepRoof({CertifiedReal(1), CertifiedReal(0)}), ValidationError);
  CHECK_THROWS_AS(StepRoof({CertifiedReal(-1)}), ValidationError);
  CHECK(StepRoof::unit(3).dot(IntVector{1, 2, 3}).exact_value() == 6);
}

TEST_CASE("Birkhoff sums") {
  const IetMap& t = golden_iet().iet;
  StepRoof unit = StepRoof::unit(5);
  for (const auto& x : sample_points(t, 3)) {
    CHECK(birkhoff_sum(t, unit, 0, x).exact_value() == 0);
    CHECK(birkhoff_sum(t, unit, 17, x).exact_value() == 17);
    CHECK(birkhoff_sum(t, unit, -9, x).exact_value() == -9);
    CHECK(birkhoff_sum(t, uneven_roof(), 0, x).exact_value() == 0);
  }
}

TEST_CASE("Birkhoff cocycle identity") {
  const IetMap& t = golden_iet().iet;
  StepRoof f = uneven_roof();
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(-40, 40);
  for (const auto& x : sample_points(t, 4)) {
    std::int64_t m = len(rng), n = len(rng);
    LinearForm y = x;
    for (std::int64_t k = 0; k < m; ++k) y = t.apply(y);
    for (std::int64_t k = 0; k > m; --k) y = t.apply_inv(y);
    CHECK(same(birkhoff_sum(t, f, m + n, x), birkhoff_sum(t, f, m, x) + birkhoff_sum(t, f, n, y)));
  }
}

TEST_CASE("suspension flow at unit time is the base map") {
  const IetMap& t = golden_iet().iet;
  StepRoof unit = StepRoof::unit(5);
  for (const auto& x : sample_points(t, 20)) {
    FlowPoint p = flow_step(t, unit, CertifiedReal(1), {x, CertifiedReal(0)});
    CHECK(p.x == t.apply(x));
    REQUIRE(p.r.is_exact());
    CHECK(p.r.exact_value() == 0);
    FlowPoint q = flow_step(t, unit, CertifiedReal(0), {x, CertifiedReal(mpq_class(1, 3))});
    CHECK(q.x == x);
    CHECK(q.r.exact_value() == mpq_class(1, 3));
  }
}

TEST_CASE("flow under a step roof") {
  const IetMap& t = golden_iet().iet;
  StepRoof f = uneven_roof();
  StepRoof rational({CertifiedReal(mpq_class(1, 2)), CertifiedReal(2), CertifiedReal(3), CertifiedReal(mpq_class(5, 7)),
                     CertifiedReal(mpq_class(9, 4))});
  for (const auto& x : sample_points(t, 3)) {
    int i = t.locate(x);
    // flowing for f(x) from the floor lands on the floor above Tx
    FlowPoint p = flow_step(t, rational, rational.height(i), {x, CertifiedReal(0)});
    CHECK(p.x == t.apply(x));
    CHECK(p.r.exact_value() == 0);
    // an irrational roof hit exactly cannot be decided
    if (!f.height(i).is_exact())
      CHECK_THROWS_AS(flow_step(t, f, f.height(i), {x, CertifiedReal(0)}), AmbiguousInterval);

    const CertifiedReal& fx = f.height(i);
    FlowPoint q = flow_step(t, f, fx / CertifiedReal(2), {x, CertifiedReal(0)});
    CHECK(q.x == x);
    CHECK(same(q.r, fx / CertifiedReal(2)));
    // additivity and reversal
    CertifiedReal s1 = CertifiedReal(mpq_class(7, 3)), s2 = CertifiedReal(mpq_class(5, 2));
    FlowPoint a = flow_step(t, f, s2, flow_step(t, f, s1, {x, fx / CertifiedReal(3)}));
    FlowPoint b = flow_step(t, f, s1 + s2, {x, fx / CertifiedReal(3)});
    CHECK(a.x == b.x);
    CHECK(same(a.r, b.r));
    FlowPoint back = flow_step(t, f, -(s1 + s2), b);
    CHECK(back.x == x);
    CHECK(same(back.r, fx / CertifiedReal(3)));
  }
  const LinearForm& x0 = t.beta(1);
  CHECK_THROWS_AS(flow_step(t, f, CertifiedReal(1), {x0, CertifiedReal(10)}), ValidationError);
}

TEST_CASE("q values") {
  CHECK(q_value(golden::matrix_a(), parse_word(golden::kWord1)) == 35);
  CHECK(q_value(golden::matrix_a(), parse_word(golden::kWord2)) == 36);
  CHECK(q_value(golden::matrix_a(), Word{}) == 0);
  CHECK(golden::matrix_a() * IntVector{1, 1, 1, 1, 2} == IntVector{6, 3, 9, 4, 13});
  CHECK(golden::matrix_a() * IntVector{2, 0, 2, 0, 3} == IntVector{7, 2, 10, 3, 14});
}

TEST_CASE("least extensions and tower words") {
  const IetMap& t = golden_iet().iet;
  Word e = least_extension(t, parse_word("25"), 10);
  CHECK(e.size() == 10);
  CHECK(e[0] == 2);
  CHECK(e[1] == 5);
  CHECK(word_interval(t, e));
  CHECK_THROWS_AS(least_extension(t, parse_word("11"), 5), NotFound);

  const auto& w = golden_words();
  REQUIRE(w.size() == 2);
  for (const auto& tw : w) {
    CHECK(tw.ext.size() == 38);
    CHECK(std::equal(tw.w.begin(), tw.w.end(), tw.ext.begin()));
    CHECK(tw.ext[tw.w.size()] == tw.w[0]);
    CHECK(certified_sign(tw.theta) > 0);
  }
}

TEST_CASE("depth views rebase onto the induced lengths") {
  for (int depth : {0, 12, 24}) {
    DepthView v = depth_view(golden_iet(), depth);
    IntMatrix a = compose_path(golden::loop().repeated(depth / 12)).matrix;
    CHECK(v.matrix == a);
    CHECK(v.heights == a.column_sums());
    CHECK(v.induced.perm() == tau_sym(5));
    // base lengths are rows of A over the induced unit basis
    for (int i = 1; i <= 5; ++i) CHECK(v.base.length(i).coef == a.row(i - 1));
  }
}

TEST_CASE("tower partitions") {
  for (int depth : {0, 12, 24}) {
    TowerPartition p = tower_partition_check(golden_iet(), depth);
    CHECK(p.ok());
    CHECK(p.levels == sum(compose_path(golden::loop().repeated(depth / 12)).matrix.column_sums()));
  }
}

TEST_CASE("tower diagnostics over two periods") {
  auto diags = tower_diagnostics(golden_iet(), golden_words(), 2);
  REQUIRE(diags.size() == 2);
  CHECK(diags[0].depth == 24);
  CHECK(diags[1].depth == 48);
  CertifiedReal theta = golden_iet().perron.theta;
  for (const auto& d : diags) {
    CHECK(d.ok());
    CertifiedReal m = compare(golden_words()[0].theta, golden_words()[1].theta) == Ordering::Less
                          ? golden_words()[0].theta
                          : golden_words()[1].theta;
    CHECK(same(d.alpha, CertifiedReal(4) * m / CertifiedReal(25)));
    for (const auto& s : d.sets) {
      CHECK(s.measure_ok);
      CHECK(s.displacement_ok);
      CHECK(s.boundary_ok);
    }
  }
  CHECK(diags[1].has_ratio);
  CHECK(same(diags[1].expected_ratio, CertifiedReal(1) / (theta * theta)));
  for (std::size_t r = 0; r < 2; ++r)
    CHECK(compare(diags[1].sets[r].displacement_abs, diags[0].sets[r].displacement_abs) == Ordering::Less);
  // B A l(251534) = B (6,3,9,4,13) = (197,59,321,115,406)
  CHECK(diags[0].sets[0].q == 1098);
  CHECK(diags[0].sets[1].q == 1099);
}

TEST_CASE("cocycle constancy") {
  CocycleReport unit = cocycle_constancy_check(golden_iet(), golden_words(), StepRoof::unit(5), 24, 2);
  CHECK(unit.ok());
  CHECK(unit.difference.exact_value() == -1);
  CHECK(unit.expected_difference.exact_value() == -1);
  for (std::size_t r = 0; r < 2; ++r) CHECK(unit.a[r].exact_value() == unit.q[r]);

  StepRoof h({CertifiedReal(1), CertifiedReal(2), CertifiedReal(3), CertifiedReal(4), CertifiedReal(5)});
  CocycleReport weighted = cocycle_constancy_check(golden_iet(), golden_words(), h, 24, 2, 9);
  CHECK(weighted.ok());
  // h . (-1,1,-1,1,-1)
  CHECK(weighted.difference.exact_value() == -3);

  // at depth 0 a single symbol returns after one step with f = h_i
  const IetMap& t = golden_iet().iet;
  for (int i = 1; i <= 5; ++i)
    CHECK(birkhoff_sum(t, h, 1, t.beta(i - 1)).exact_value() == i);
}
