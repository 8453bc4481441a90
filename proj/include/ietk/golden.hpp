#pragma once

#include <string>
#include <vector>

#include "ietk/check.hpp"
#include "ietk/subst.hpp"

namespace ietk::golden {

inline constexpr const char* kLoop = "bbaababaaaba";
inline constexpr const char* kWord1 = "251534";
inline constexpr const char* kWord2 = "5153351";
// The first 59 symbols of the fixed point u.
inline constexpr const char* kFixedPrefix = "15251534351525251534351525153435153351534343515335153435152";

IntMatrix matrix_a();
IntMatrix matrix_b();
std::vector<Word> sigma_images();
IntVector eigenvector_of_one();  // (-1,1,-1,1,-1)
RauzyPath loop();

// 2 + sqrt(3)/2 + sqrt(15 + 8 sqrt(3))/2
CertifiedReal theta_closed_form();
// Closed-form right eigenvector (unnormalised).
std::vector<CertifiedReal> eigenvector_closed_form();

struct Options {
  int precision_bits = 256;
  int max_bits = kDefaultMaxBits;
  bool tamper_matrix = false;  // negative control: perturb one entry before the spectral checks
};

// The full reproduction checklist; exceptions inside a check become a failed
// check whose detail names the exception.
std::vector<Check> verify(const Options& opt = {});

}  // namespace ietk::golden
