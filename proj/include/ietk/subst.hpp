#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ietk/iet.hpp"
#include "ietk/perron.hpp"

namespace ietk {

class Substitution {
 public:
  Substitution(int m, std::vector<Word> images);
  static Substitution identity(int m);

  int m() const { return m_; }
  const Word& image(int i) const { return images_[i - 1]; }
  const std::vector<Word>& images() const { return images_; }

  // M_ij = occurrences of i in sigma(j).
  IntMatrix matrix() const;
  Word apply(const Word& w) const;
  Substitution power(int k) const;
  bool is_primitive() const { return ietk::is_primitive(matrix()); }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  int m_;
  std::vector<Word> images_;
};

// sigma(i) is the first-return coding of the left endpoint of Delta'_i, where
// Delta' are the intervals after n Rauzy steps.
Substitution substitution_from_induction(const IetMap& t, int n);

// Prefix of the fixed point of sigma^k starting with seed, k <= m.
Word fixed_point_prefix(const Substitution& s, int seed, std::size_t length);

// All factors of length k of the language of a primitive substitution.
std::vector<Word> language(const Substitution& s, int k);

// Throws ValidationError if the fixed-point prefix of the given length is
// eventually periodic with a period at most a quarter of the window.
void check_aperiodic(const Substitution& s, std::size_t window = 4096);

// Words w of length 1..max_len with w w_0 in the language, canonical order.
std::vector<Word> recurrence_words(const Substitution& s, int max_len);

struct WitnessPair {
  Word w1, w2;
  CyclicSet set;
  IntVector b;  // l(w1) - l(w2) = b(set)
};

// First pair, in canonical enumeration order, of recurrence words whose
// population difference is b(S) for some S in sets. Throws NotFound.
WitnessPair find_witness_pair(const Substitution& s, const std::vector<CyclicSet>& sets, int max_len = 64);

struct PeriodicIet {
  RauzyPath path;
  IntMatrix matrix;        // composed path matrix
  int positive_power = 0;  // least k with matrix^k strictly positive
  PerronResult perron;
  IetMap iet;
};

// Lengths = normalised right Perron eigenvector; induction is replayed to
// certify that each step's label matches the path and that lengths come back
// scaled by theta^-1.
PeriodicIet periodic_iet_from_path(const RauzyPath& path, int bits = 256, int max_bits = kDefaultMaxBits);

struct QuarticGaloisData {
  IntPoly quartic;
  IntPoly resolvent_cubic;
  std::vector<IntPoly> resolvent_factors;
  mpz_class discriminant;
  bool discriminant_is_square = false;
  std::string galois_group;  // S4, A4, D4, C4, V4
};

struct WeakMixingReport {
  IntPoly char_poly;
  std::vector<IntPoly> factors;
  std::vector<QuarticGaloisData> quartics;
  std::string criterion;
  std::string verdict;  // "pass", "fail", or "not-evaluated"
};

struct WeakMixingCriterion {
  std::string name = "none";
  std::function<bool(const WeakMixingReport&)> test;  // empty: no verdict
};

QuarticGaloisData quartic_galois_data(const IntPoly& quartic);

WeakMixingReport weak_mixing_certificate(const IntMatrix& a, const WeakMixingCriterion& criterion = {});

}  // namespace ietk
