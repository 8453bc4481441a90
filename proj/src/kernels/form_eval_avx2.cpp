#include "ietk/kernels/form_eval.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace ietk::kernels {

__attribute__((target("avx2"))) void enclose_forms_avx2(const double* coef, std::size_t count,
                                                        std::size_t dim, const double* mid,
                                                        const double* rad, double* val,
                                                        double* err) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  const double gamma = static_cast<double>(dim + 3) * 0x1p-52;
  const __m256d vgamma = _mm256_set1_pd(gamma);
  const __m256d vscale = _mm256_set1_pd(1.0 + 0x1p-40);
  const __m256d vtiny = _mm256_set1_pd(0x1p-1000);
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    __m256d acc = _mm256_setzero_pd(), absacc = _mm256_setzero_pd(), radacc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < dim; ++i) {
      __m256d c = _mm256_loadu_pd(coef + i * count + k);
      __m256d p = _mm256_mul_pd(c, _mm256_set1_pd(mid[i]));
      acc = _mm256_add_pd(acc, p);
      absacc = _mm256_add_pd(absacc, _mm256_andnot_pd(sign, p));
      radacc = _mm256_add_pd(radacc, _mm256_mul_pd(_mm256_andnot_pd(sign, c), _mm256_set1_pd(rad[i])));
    }
    _mm256_storeu_pd(val + k, acc);
    __m256d e = _mm256_add_pd(radacc, _mm256_mul_pd(absacc, vgamma));
    e = _mm256_add_pd(_mm256_mul_pd(e, vscale), vtiny);
    _mm256_storeu_pd(err + k, e);
  }
  for (; k < count; ++k) {
    double acc = 0.0, absacc = 0.0, radacc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      double c = coef[i * count + k];
      double p = c * mid[i];
      acc = acc + p;
      absacc = absacc + std::fabs(p);
      radacc = radacc + std::fabs(c) * rad[i];
    }
    val[k] = acc;
    err[k] = enclosure_error(radacc, absacc, dim);
  }
}

}  // namespace ietk::kernels

#endif
