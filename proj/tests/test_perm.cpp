#include <random>
#include <set>

#include "doctest.h"
#include "ietk/errors.hpp"
#include "ietk/rauzy.hpp"

using namespace ietk;

namespace {

// every irreducible permutation of size m, by brute force
std::vector<Permutation> irreducibles(int m) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = i + 1;
  std::vector<Permutation> out;
  do {
    Permutation p(img);
    if (is_irreducible(p)) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 1}), ValidationError);
  Permutation p({4, 1, 3, 5, 2});
  for (int i = 1; i <= 5; ++i) CHECK(p.inverse(p(i)) == i);
  CHECK(p.to_string() == "(4,1,3,5,2)");
}

TEST_CASE("is_irreducible examples") {
  CHECK(is_irreducible(Permutation({5, 4, 3, 2, 1})));
  CHECK_FALSE(is_irreducible(Permutation({1, 3, 2})));
  CHECK(is_irreducible(Permutation({4, 1, 3, 5, 2})));
  CHECK_FALSE(is_irreducible(Permutation({2, 1, 3})));
}

TEST_CASE("Rauzy operations examples") {
  CHECK(apply_a(tau_sym(5)) == Permutation({5, 1, 4, 3, 2}));
  CHECK(apply_b(tau_sym(5)) == Permutation({2, 5, 4, 3, 1}));
  CHECK(apply_a(Permutation({2, 1})) == Permutation({2, 1}));
  CHECK(apply_b(Permutation({2, 1})) == Permutation({2, 1}));
}

TEST_CASE("Rauzy operations preserve irreducibility") {
  for (int m = 2; m <= 6; ++m)
    for (const auto& p : irreducibles(m)) {
      CHECK(is_irreducible(apply_a(p)));
      CHECK(is_irreducible(apply_b(p)));
    }
}

TEST_CASE("eta and cyclic sets examples") {
  CHECK(eta(tau_sym(5)) == std::vector<int>{4, 5, 0, 1, 2, 3});
  auto e2 = eta(Permutation({2, 1}));
  CHECK(std::set<int>(e2.begin(), e2.end()) == std::set<int>{0, 1, 2});

  auto s5 = cyclic_sets(tau_sym(5));
  REQUIRE(s5.size() == 2);
  CHECK(s5[0].members == std::vector<int>{0, 2, 4});
  CHECK(s5[1].members == std::vector<int>{1, 3, 5});

  auto q7 = cyclic_sets(tau(7));
  REQUIRE(q7.size() == 2);
  CHECK(q7[0].members == std::vector<int>{0, 1, 3, 5});
  CHECK(q7[1].members == std::vector<int>{2, 4, 6, 7});

  for (int m = 5; m <= 13; m += 2) {
    auto s = cyclic_sets(tau_sym(m));
    REQUIRE(s.size() == 2);
    for (int i = 0; i <= m; ++i) CHECK(s[i % 2].contains(i));
  }
}

TEST_CASE("b_vector examples") {
  CHECK(b_vector(CyclicSet{{0, 2, 4}}, 5) == IntVector{1, -1, 1, -1, 1});
  CHECK(b_vector(CyclicSet{{1, 3, 5}}, 5) == IntVector{-1, 1, -1, 1, -1});
  for (int m = 5; m <= 11; m += 2) {
    auto q = cyclic_sets(tau(m));
    IntVector expected(m, 0);
    for (int i = 1; i < m - 1; ++i) expected[i] = (i % 2 == 1) ? 1 : -1;
    CHECK(b_vector(q[0], m) == expected);
  }
  // the whole of {0..m} gives the zero vector
  CyclicSet all{{0, 1, 2, 3, 4, 5}};
  CHECK(b_vector(all, 5) == IntVector(5, 0));
}

TEST_CASE("cyclic set invariants for all irreducible permutations up to m = 7") {
  for (int m = 2; m <= 7; ++m) {
    for (const auto& p : irreducibles(m)) {
      auto sets = cyclic_sets(p);
      std::vector<int> seen(m + 1, 0);
      IntVector total(m, 0);
      for (const auto& s : sets) {
        for (int i : s.members) ++seen[i];
        IntVector b = b_vector(s, m);
        for (auto x : b) REQUIRE((x >= -1 && x <= 1));
        // entry sum is chi(0) - chi(m), one of three cases
        int expected = (s.contains(0) ? 1 : 0) - (s.contains(m) ? 1 : 0);
        REQUIRE(sum(b) == expected);
        REQUIRE(predicted_b_sum(s, m) == expected);
        total = total + b;
      }
      REQUIRE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
      REQUIRE(total == IntVector(m, 0));
    }
  }
}

TEST_CASE("H membership examples") {
  Permutation p = tau_sym(5);
  CHECK_FALSE(H_membership(IntVector(5, 1), p));
  IntMatrix l = L_matrix(p);
  for (int j = 0; j < 5; ++j) CHECK(H_membership(l.col(j), p));
  // h orthogonal to both b(S): (1,1,0,0,0) and (0,0,1,1,0) work
  CHECK(H_membership(IntVector{1, 1, 0, 0, 0}, p));
  CHECK(H_membership(IntVector{3, 3, -2, -2, 0}, p));
  CHECK(H_membership_via_b(IntVector{3, 3, -2, -2, 0}, p));
}

TEST_CASE("H membership characterizations agree on the golden class") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-5, 5);
  RauzyClass rc = rauzy_class(tau_sym(5));
  for (const auto& p : rc.vertices()) {
    IntMatrix l = L_matrix(p);
    int hits = 0;
    for (int k = 0; k < 1000; ++k) {
      IntVector h(5);
      if (k % 2 == 0) {
        for (auto& x : h) x = c(rng);
      } else {
        IntVector x(5);
        for (auto& v : x) v = c(rng);
        h = l * x;
      }
      bool a = H_membership(h, p), b = H_membership_via_b(h, p);
      REQUIRE(a == b);
      hits += a;
    }
    CHECK(hits >= 500);
  }
}

TEST_CASE("tilde class membership") {
  CHECK(in_tilde_class(tau_sym(5)));
  for (int m = 5; m <= 15; m += 2) {
    CHECK(in_tilde_class(tau(m)));
    CHECK(in_tilde_class(tau_sym(m)));
  }
  // (4,3,2,1): a single cyclic set {0..4}, so b = 0 and the entry sum is 0
  CHECK_FALSE(in_tilde_class(Permutation({4, 3, 2, 1})));
}

TEST_CASE("tau and tau_sym") {
  CHECK(tau_sym(5) == Permutation({5, 4, 3, 2, 1}));
  CHECK(tau(5) == Permutation({4, 1, 3, 5, 2}));
  CHECK(tau(7) == Permutation({6, 1, 5, 4, 3, 7, 2}));
}

TEST_CASE("reduction identity for odd m") {
  for (int m = 5; m <= 21; m += 2) CHECK(reduction_identity_check(m));
  // by hand: b applied twice to a(5,4,3,2,1)
  CHECK(apply_b(apply_b(apply_a(tau_sym(5)))) == Permutation({4, 1, 3, 5, 2}));
}
