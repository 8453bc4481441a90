#include <random>

#include "doctest.h"
#include "ietk/errors.hpp"
#include "ietk/golden.hpp"
#include "ietk/perron.hpp"
#include "ietk/polynomial.hpp"

using namespace ietk;

namespace {

// det by cofactor expansion along the first row, exact
mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  mpz_class d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    mpz_class c = m[0][j] * cofactor_det(minor);
    d += (j % 2 == 0) ? c : mpz_class(-c);
  }
  return d;
}

IntPoly product(const std::vector<IntPoly>& fs) {
  IntPoly p({mpz_class(1)});
  for (const auto& f : fs) p = p * f;
  return p;
}

}  // namespace

TEST_CASE("decimal parsing keeps base 10 with leading zeros") {
  CHECK(CertifiedReal::parse("0.25").exact_value() == mpq_class(1, 4));
  CHECK(CertifiedReal::parse("-0.0890").exact_value() == mpq_class(-89, 1000));
  CHECK(CertifiedReal::parse("010").exact_value() == 10);
  CHECK(CertifiedReal::parse("3/12").exact_value() == mpq_class(1, 4));
  CHECK_THROWS_AS(CertifiedReal::parse("0.3x"), ValidationError);
  CHECK_THROWS_AS(CertifiedReal::parse(""), ValidationError);
}

TEST_CASE("compare against decimal approximations") {
  CertifiedReal r3 = sqrt(CertifiedReal(3));
  // sqrt 3 = 1.73205080..., below 1.7320509 and above 1.7320508
  CHECK(compare(r3, CertifiedReal::parse("1.7320509")) == Ordering::Less);
  CHECK(compare(r3, CertifiedReal::parse("1.7320508")) == Ordering::Greater);
  CHECK(compare(r3, r3) == Ordering::Ambiguous);
  CHECK(compare(golden::theta_closed_form(), CertifiedReal::parse("5.55")) == Ordering::Greater);
  CHECK(compare(CertifiedReal(mpq_class(1, 3)), CertifiedReal(mpq_class(2, 6))) == Ordering::Equal);
}

TEST_CASE("refinement gives nested enclosures") {
  std::vector<CertifiedReal> xs{sqrt(CertifiedReal(2)), golden::theta_closed_form(),
                                sqrt(CertifiedReal(7)) / (CertifiedReal(1) + sqrt(CertifiedReal(5)))};
  for (const auto& x : xs) {
    Interval prev = x.enclosure();
    for (int bits = 64; bits <= 2048; bits *= 2) {
      Interval cur = x.at(bits);
      CHECK(cur.subset_of(prev));
      CHECK(cur.width() <= prev.width());
      prev = cur;
    }
    CHECK(prev.width() < mpq_class(1, 2) / mpq_class(mpz_class(1) << 1000));
  }
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(IntMatrix::identity(5)) == IntPoly::from_high({1, -5, 10, -10, 5, -1}));
  CHECK(char_poly(IntMatrix{{1, 1}, {1, 0}}) == IntPoly::from_high({1, -1, -1}));
  IntPoly golden_p = char_poly(golden::matrix_a());
  CHECK(golden_p == IntPoly::from_high({1, -1}) * IntPoly::from_high({1, -8, 15, -8, 1}));
}

TEST_CASE("char_poly agrees with cofactor expansion at integer points") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = entry(rng);
    IntPoly p = char_poly(a);
    for (int x = -3; x <= 3; ++x) {
      std::vector<std::vector<mpz_class>> m(4, std::vector<mpz_class>(4));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = (i == j ? x : 0) - a(i, j);
      REQUIRE(p.eval(mpz_class(x)) == cofactor_det(m));
    }
  }
}

TEST_CASE("factor_int_poly examples") {
  auto f = factor_int_poly(char_poly(golden::matrix_a()));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == IntPoly::from_high({1, -1}));
  CHECK(f[1] == IntPoly::from_high({1, -8, 15, -8, 1}));

  auto g = factor_int_poly(IntPoly::from_high({1, 0, -1}));
  REQUIRE(g.size() == 2);
  CHECK(product(g) == IntPoly::from_high({1, 0, -1}));
  CHECK(std::find(g.begin(), g.end(), IntPoly::from_high({1, -1})) != g.end());
  CHECK(std::find(g.begin(), g.end(), IntPoly::from_high({1, 1})) != g.end());

  IntPoly q = IntPoly::from_high({1, -8, 15, -8, 1});
  auto h = factor_int_poly(q);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == q);
}

TEST_CASE("factor_int_poly product equals input") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    // products of small random factors, so nontrivial factorizations occur
    IntPoly p({mpz_class(1)});
    int parts = 1 + trial % 3;
    for (int k = 0; k < parts; ++k) {
      int deg = 1 + (trial + k) % 3;
      std::vector<mpz_class> co;
      for (int i = 0; i < deg; ++i) co.push_back(c(rng));
      co.push_back(1 + (trial + k) % 2);
      p = p * IntPoly(co);
    }
    if (p.is_zero()) continue;
    auto fs = factor_int_poly(p);
    IntPoly prod = product(fs);
    // factors are primitive up to sign, so the product can differ by the content
    bool same = prod == p || prod * IntPoly({mpz_class(-1)}) == p ||
                prod * IntPoly({p.content()}) == p || prod * IntPoly({mpz_class(-p.content())}) == p;
    CHECK_MESSAGE(same, p.to_string() << " vs " << prod.to_string());
  }
}

TEST_CASE("factor_int_poly refuses degree above the cap") {
  std::vector<mpz_class> co(kMaxFactorDegree + 2, mpz_class(1));
  CHECK_THROWS_AS(factor_int_poly(IntPoly(co)), DegreeTooLarge);
}

TEST_CASE("perron examples") {
  PerronResult g = perron(golden::matrix_a(), 256);
  Interval d = (g.theta - golden::theta_closed_form()).at(256);
  CHECK(d.contains_zero());
  CHECK(d.width() < mpq_class(1, mpz_class("1000000000000000000000000000000")));

  CHECK_THROWS_AS(perron(IntMatrix::identity(3)), NotPrimitive);

  PerronResult fib = perron(IntMatrix{{1, 1}, {1, 0}}, 256);
  CertifiedReal phi = (CertifiedReal(1) + sqrt(CertifiedReal(5))) / CertifiedReal(2);
  CHECK((fib.theta - phi).at(256).contains_zero());
  // v sums to 1 and v_1 / v_2 = phi
  CHECK((fib.vector[0] + fib.vector[1] - CertifiedReal(1)).at(256).contains_zero());
  CHECK((fib.vector[0] - phi * fib.vector[1]).at(256).contains_zero());
}

TEST_CASE("perron residual straddles zero") {
  std::vector<IntMatrix> ms{golden::matrix_a(), golden::matrix_b(), IntMatrix{{2, 1, 0}, {1, 1, 1}, {0, 1, 3}},
                            IntMatrix{{1, 1}, {1, 0}}};
  for (const auto& a : ms) {
    PerronResult r = perron(a, 256);
    for (const auto& iv : perron_residual(a, r, 256)) CHECK(iv.contains_zero());
  }
}
