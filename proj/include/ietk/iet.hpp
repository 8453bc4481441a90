#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ietk/rauzy.hpp"
#include "ietk/words.hpp"

namespace ietk {

// T x = x + offset_i on Delta_i = [beta_{i-1}, beta_i).
class IetMap {
 public:
  explicit IetMap(IetPair pair);

  const IetPair& pair() const { return pair_; }
  int m() const { return pair_.m(); }
  const LengthBasis& basis() const { return *pair_.basis; }
  const Permutation& perm() const { return pair_.perm; }

  const LinearForm& beta(int t) const { return betas_[t]; }            // t = 0..m
  const LinearForm& length(int i) const { return pair_.lengths[i - 1]; }  // i = 1..m
  const LinearForm& offset(int i) const { return offsets_[i - 1]; }
  const LinearForm& total() const { return betas_.back(); }
  // Left endpoint of T(Delta_i).
  LinearForm image_left(int i) const { return betas_[i - 1] + offsets_[i - 1]; }

  // -1, 0, 1; throws AmbiguousComparison.
  int compare(const LinearForm& x, const LinearForm& y) const;

  // Index i with x in Delta_i; throws OutOfDomain or AmbiguousInterval.
  int locate(const LinearForm& x) const;
  int locate(const CertifiedReal& x) const { return search(x, betas_); }
  // Index i with x in T(Delta_i).
  int locate_image(const LinearForm& x) const;

  LinearForm apply(const LinearForm& x) const { return x + offsets_[locate(x) - 1]; }
  LinearForm apply_inv(const LinearForm& x) const { return x - offsets_[locate_image(x) - 1]; }

  CertifiedReal apply(const CertifiedReal& x) const;
  CertifiedReal apply_inv(const CertifiedReal& x) const;

 private:
  int search(const LinearForm& x, const std::vector<LinearForm>& cuts,
             const std::vector<FastEnclosure>& fast) const;
  int search(const CertifiedReal& x, const std::vector<LinearForm>& cuts) const;

  IetPair pair_;
  std::vector<LinearForm> betas_;
  std::vector<LinearForm> offsets_;
  std::vector<LinearForm> image_cuts_;  // left ends of image intervals by position, then |lambda|
  std::vector<FastEnclosure> betas_fast_, image_fast_;
};

Word code_orbit(const IetMap& t, const LinearForm& x, int n);

// Symbol counts of the first n orbit points of x; x is advanced to T^n x.
IntVector orbit_population(const IetMap& t, LinearForm& x, std::int64_t n);
Word code_orbit(const IetMap& t, const CertifiedReal& x, int n);

// Endpoint T^{-j} beta_t, read along the word's branches.
struct Endpoint {
  LinearForm x;
  int j = 0;
  int t = 0;
};

struct WordInterval {
  Endpoint left, right;  // [left, right)
};

std::optional<WordInterval> word_interval(const IetMap& t, const Word& w);

bool is_recurrence_word(const IetMap& t, const Word& w);

enum class IdocVerdict { PassUpToN, FailWithCertificate, Unknown };
const char* to_string(IdocVerdict v);

struct IdocReport {
  IdocVerdict verdict = IdocVerdict::Unknown;
  int horizon = 0;
  // Colliding (t, j) pairs when the verdict is a failure; detail otherwise.
  int t1 = 0, j1 = 0, t2 = 0, j2 = 0;
  std::string detail;
};

// Checks the points T^{-j} beta_t, 0 <= j <= N, 1 <= t <= m-1, for pairwise distinctness.
IdocReport idoc_heuristic(const IetMap& t, int n);

}  // namespace ietk
