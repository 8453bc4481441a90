#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ietk/subst.hpp"

namespace ietk {

class StepRoof {
 public:
  explicit StepRoof(std::vector<CertifiedReal> heights);  // throws ValidationError unless all > 0
  static StepRoof unit(int m);

  int m() const { return static_cast<int>(h_.size()); }
  const CertifiedReal& height(int i) const { return h_[i - 1]; }
  const std::vector<CertifiedReal>& heights() const { return h_; }
  CertifiedReal dot(const IntVector& v) const;

 private:
  std::vector<CertifiedReal> h_;
};

struct FlowPoint {
  LinearForm x;
  CertifiedReal r;  // 0 <= r < f(x)
};

// f^(n)(x): forward sum for n > 0, 0 for n = 0, minus the backward sum for n < 0.
CertifiedReal birkhoff_sum(const IetMap& t, const StepRoof& f, std::int64_t n, const LinearForm& x);

FlowPoint flow_step(const IetMap& t, const StepRoof& f, const CertifiedReal& s, const FlowPoint& p);

// |A l(w)|.
std::int64_t q_value(const IntMatrix& a, const Word& w);

// Lexicographically least word of the given length that starts with prefix
// and has a nonempty interval for t. Throws NotFound if prefix is empty there.
Word least_extension(const IetMap& t, const Word& prefix, std::size_t length);

struct TowerWord {
  Word w;               // witness word w_r
  Word ext;             // w_r w_r0 ..., length K + 1
  CertifiedReal theta;  // |I_ext| for the base map
};

// Extensions of w_r w_r0 to length K + 1 with K = max(|w_1|, |w_2|) + 1.
std::vector<TowerWord> prepare_tower_words(const IetMap& t, const Word& w1, const Word& w2);

// The base map and the depth-n induced map, both written over the basis
// lambda^(n) so that forms along long orbits keep small coefficients.
struct DepthView {
  int depth = 0;
  IntMatrix matrix;  // A^(n)
  IntVector heights;  // column sums of A^(n)
  IetPair original_end;  // rho^(n) over the original basis
  IetMap base;
  IetMap induced;
};

DepthView depth_view(const PeriodicIet& p, int depth);

struct TowerSet {
  std::int64_t height = 0;  // h_{w0}
  std::int64_t q = 0;       // q_r
  LinearForm left, right;   // I_r over the depth basis
  CertifiedReal interval_length;
  CertifiedReal measure;  // mu(C_r) = h |I_r|
  bool measure_ok = false;
  LinearForm displacement;  // T^{q_r} x - x, constant on C_r
  CertifiedReal displacement_abs;
  CertifiedReal delta_w0_length;  // |Delta^(n)_{w0}|
  bool displacement_ok = false;
  CertifiedReal boundary;  // mu(C_r sym-diff T^{-1} C_r)
  bool boundary_ok = false;
};

struct TowerDiagnostics {
  int depth = 0;
  IntVector heights;
  CertifiedReal alpha;
  CertifiedReal rho_total;  // |rho^(n)|
  std::vector<TowerSet> sets;
  // Against the previous depth: displacement and |I_r| ratios per word.
  bool has_ratio = false;
  std::vector<CertifiedReal> displacement_ratio, interval_ratio;
  CertifiedReal expected_ratio;  // theta^-positive_power
  bool ratio_ok = true;
  bool ok() const;
};

// Depths k * positive_power * |path| for k = 1..periods.
std::vector<TowerDiagnostics> tower_diagnostics(const PeriodicIet& p, const std::vector<TowerWord>& words,
                                                int periods);

struct TowerPartition {
  int depth = 0;
  std::int64_t levels = 0;
  bool first_return = false;  // levels 1..h-1 avoid the base, level h returns
  bool disjoint_fill = false;  // sorted levels tile [0, |lambda|)
  bool total_identity = false;  // sum h_j lambda^(n)_j = |lambda| as forms
  bool ok() const { return first_return && disjoint_fill && total_identity; }
};

TowerPartition tower_partition_check(const PeriodicIet& p, int depth);

struct CocycleSample {
  int r = 0;
  std::int64_t level = 0;
  LinearForm point;  // over the depth basis
  IntVector population;
  CertifiedReal birkhoff;
  bool matches = false;  // population = A^(n) l(w_r) and f^(q_r) = a_r
  bool returns = false;  // T^{q_r} x = x + displacement
};

struct CocycleReport {
  int depth = 0;
  std::vector<std::int64_t> q;
  std::vector<CertifiedReal> a;  // a_r = h . A^(n) l(w_r)
  CertifiedReal difference;
  CertifiedReal expected_difference;  // h . (l(w_1) - l(w_2))
  bool difference_ok = false;
  std::vector<CocycleSample> samples;
  bool ok() const;
};

CocycleReport cocycle_constancy_check(const PeriodicIet& p, const std::vector<TowerWord>& words,
                                      const StepRoof& h, int depth, int samples_per_word,
                                      std::uint64_t seed = 1);

}  // namespace ietk
