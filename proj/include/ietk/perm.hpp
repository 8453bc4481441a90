#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ietk/int_matrix.hpp"

namespace ietk {

// Bijection of {1..m}; image[i-1] = pi(i), the position of interval i after exchange.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i - 1]; }
  int inverse(int p) const { return inv_[p - 1]; }
  const std::vector<int>& image() const { return image_; }
  Permutation inverted() const { return Permutation(inv_); }
  std::string to_string() const;  // "(5,4,3,2,1)"

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.image_ <=> b.image_; }

 private:
  std::vector<int> image_;
  std::vector<int> inv_;
};

enum class Label { a, b };
inline char to_char(Label c) { return c == Label::a ? 'a' : 'b'; }
Label label_from_char(char c);

bool is_irreducible(const Permutation& p);
Permutation apply_a(const Permutation& p);
Permutation apply_b(const Permutation& p);
Permutation apply(Label c, const Permutation& p);

// eta[i] for i = 0..m.
std::vector<int> eta(const Permutation& p);

struct CyclicSet {
  std::vector<int> members;  // sorted subset of {0..m}
  bool contains(int i) const;
  std::string to_string() const;  // "{1,3,5}"
  friend bool operator==(const CyclicSet&, const CyclicSet&) = default;
  friend auto operator<=>(const CyclicSet&, const CyclicSet&) = default;
};

// Orbits of eta, ordered by smallest member.
std::vector<CyclicSet> cyclic_sets(const Permutation& p);

// b(S)_i = chi_S(i-1) - chi_S(i), i = 1..m.
IntVector b_vector(const CyclicSet& s, int m);

// The entry sum of b(S) predicted by whether 0 and m lie in S.
int predicted_b_sum(const CyclicSet& s, int m);

IntMatrix L_matrix(const Permutation& p);

// h in H(pi), decided as h orthogonal to ker L^pi over Q.
bool H_membership(const IntVector& h, const Permutation& p);
// Same question, decided as h . b(S) = 0 for all cyclic sets S.
bool H_membership_via_b(const IntVector& h, const Permutation& p);

bool in_tilde_class(const Permutation& p);

Permutation tau_sym(int m);
Permutation tau(int m);

// a first, then b applied m-3 times, starting at tau_sym(m); compares with tau(m).
bool reduction_identity_check(int m);

}  // namespace ietk
