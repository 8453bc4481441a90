#pragma once

#include <cstddef>

namespace ietk::kernels {

// Encloses count integer linear forms over a basis given as (mid, rad) pairs.
// coef is column-major: coef[i * count + k] is coefficient i of form k, each an
// integer exactly representable in a double. On return the exact value of
// form k lies in [val[k] - err[k], val[k] + err[k]].
//
// All variants perform the same operations in the same order, so their
// outputs agree bit for bit.
using EncloseFn = void (*)(const double* coef, std::size_t count, std::size_t dim,
                           const double* mid, const double* rad, double* val, double* err);

void enclose_forms_scalar(const double* coef, std::size_t count, std::size_t dim,
                          const double* mid, const double* rad, double* val, double* err);

#if defined(__x86_64__) || defined(_M_X64)
void enclose_forms_avx2(const double* coef, std::size_t count, std::size_t dim,
                        const double* mid, const double* rad, double* val, double* err);
#endif

bool avx2_supported();

// Best variant for the running CPU; chosen once.
EncloseFn enclose_forms_dispatch();
const char* enclose_forms_variant();

inline void enclose_forms(const double* coef, std::size_t count, std::size_t dim,
                          const double* mid, const double* rad, double* val, double* err) {
  enclose_forms_dispatch()(coef, count, dim, mid, rad, val, err);
}

// Shared finishing step: rounding-error allowance for a dim-term dot product.
inline double enclosure_error(double radsum, double abssum, std::size_t dim) {
  const double gamma = static_cast<double>(dim + 3) * 0x1p-52;
  return (radsum + abssum * gamma) * (1.0 + 0x1p-40) + 0x1p-1000;
}

}  // namespace ietk::kernels
