#pragma once

#include <vector>

#include "ietk/certified_real.hpp"
#include "ietk/int_matrix.hpp"
#include "ietk/polynomial.hpp"

namespace ietk {

struct PerronResult {
  CertifiedReal theta;
  std::vector<CertifiedReal> vector;  // right eigenvector, entries sum to 1
  IntPoly char_poly;
  IntPoly minimal_polynomial;     // irreducible factor vanishing at theta (empty if unknown)
  std::vector<IntVector> relations;  // basis of integer y with y . vector = 0
};

// Dominant eigenvalue and normalised right eigenvector of a primitive matrix.
PerronResult perron(const IntMatrix& a, int target_bits = 256);

// Componentwise enclosure of A v - theta v at the given precision.
std::vector<Interval> perron_residual(const IntMatrix& a, const PerronResult& r, int bits);

}  // namespace ietk
