#include "ietk/kernels/form_eval.hpp"

#include <cmath>

namespace ietk::kernels {

void enclose_forms_scalar(const double* coef, std::size_t count, std::size_t dim,
                          const double* mid, const double* rad, double* val, double* err) {
  for (std::size_t k = 0; k < count; ++k) {
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

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

EncloseFn enclose_forms_dispatch() {
#if defined(__x86_64__) || defined(_M_X64)
  static const EncloseFn fn = avx2_supported() ? &enclose_forms_avx2 : &enclose_forms_scalar;
#else
  static const EncloseFn fn = &enclose_forms_scalar;
#endif
  return fn;
}

const char* enclose_forms_variant() {
  return enclose_forms_dispatch() == &enclose_forms_scalar ? "scalar" : "avx2";
}

}  // namespace ietk::kernels
