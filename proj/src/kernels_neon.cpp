// SPDX-License-Identifier: Apache-2.0
//
// NEON kernel variants (aarch64). Same contract as the AVX2 table:
// elementwise kernels avoid fused multiply-add so they match the scalar
// reference bit-for-bit; reductions reassociate.
#include "mofu/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace mofu::kern {
namespace {

void add_d(std::size_t n, double* dst, const double* a, const double* b) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] + b[i];
}
void sub_d(std::size_t n, double* dst, const double* a, const double* b) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] - b[i];
}
void mul_d(std::size_t n, double* dst, const double* a, const double* b) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}
void muladd_d(std::size_t n, double* dst, const double* a, const double* b,
              const double* c) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t p = vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    vst1q_f64(dst + i, vaddq_f64(p, vld1q_f64(c + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i] + c[i];
}
void scale_d(std::size_t n, double* dst, const double* a, double s) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vmulq_f64(vs, vld1q_f64(a + i)));
  }
  for (; i < n; ++i) dst[i] = s * a[i];
}
void affine_d(std::size_t n, double* dst, const double* a, double s, double t) {
  const float64x2_t vs = vdupq_n_f64(s);
  const float64x2_t vt = vdupq_n_f64(t);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vaddq_f64(vmulq_f64(vs, vld1q_f64(a + i)), vt));
  }
  for (; i < n; ++i) dst[i] = s * a[i] + t;
}
void axpy_d(std::size_t n, double a, const double* x, double* y) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t p = vmulq_f64(va, vld1q_f64(x + i));
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), p));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}
void axpby_d(std::size_t n, double* dst, double a, const double* x, double b,
             const double* y) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t p = vmulq_f64(va, vld1q_f64(x + i));
    float64x2_t q = vmulq_f64(vb, vld1q_f64(y + i));
    vst1q_f64(dst + i, vaddq_f64(p, q));
  }
  for (; i < n; ++i) dst[i] = a * x[i] + b * y[i];
}
void sq_diff_d(std::size_t n, double* dst, const double* a, const double* b) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    vst1q_f64(dst + i, vmulq_f64(d, d));
  }
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    dst[i] = d * d;
  }
}
double dot_d(std::size_t n, const double* a, const double* b) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  double res = vaddvq_f64(acc);
  for (; i < n; ++i) res += a[i] * b[i];
  return res;
}
double sum_d(std::size_t n, const double* a) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(a + i));
  double res = vaddvq_f64(acc);
  for (; i < n; ++i) res += a[i];
  return res;
}
double max_abs_d(std::size_t n, const double* a) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(a + i)));
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) m = std::max(m, std::fabs(a[i]));
  return m;
}

void add_f(std::size_t n, float* dst, const float* a, const float* b) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_f32(dst + i, vaddq_f32(vld1q_f32(a + i), vld1q_f32(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] + b[i];
}
void sub_f(std::size_t n, float* dst, const float* a, const float* b) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_f32(dst + i, vsubq_f32(vld1q_f32(a + i), vld1q_f32(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] - b[i];
}
void mul_f(std::size_t n, float* dst, const float* a, const float* b) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_f32(dst + i, vmulq_f32(vld1q_f32(a + i), vld1q_f32(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}
void scale_f(std::size_t n, float* dst, const float* a, float s) {
  const float32x4_t vs = vdupq_n_f32(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_f32(dst + i, vmulq_f32(vs, vld1q_f32(a + i)));
  }
  for (; i < n; ++i) dst[i] = s * a[i];
}
void axpy_f(std::size_t n, float a, const float* x, float* y) {
  const float32x4_t va = vdupq_n_f32(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float32x4_t p = vmulq_f32(va, vld1q_f32(x + i));
    vst1q_f32(y + i, vaddq_f32(vld1q_f32(y + i), p));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}
float dot_f(std::size_t n, const float* a, const float* b) {
  float32x4_t acc = vdupq_n_f32(0.0f);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = vaddq_f32(acc, vmulq_f32(vld1q_f32(a + i), vld1q_f32(b + i)));
  }
  float res = vaddvq_f32(acc);
  for (; i < n; ++i) res += a[i] * b[i];
  return res;
}
float sum_f(std::size_t n, const float* a) {
  float32x4_t acc = vdupq_n_f32(0.0f);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = vaddq_f32(acc, vld1q_f32(a + i));
  float res = vaddvq_f32(acc);
  for (; i < n; ++i) res += a[i];
  return res;
}

const Kernels table = {
    "neon",  add_d,    sub_d, mul_d, muladd_d, scale_d, affine_d,
    axpy_d,  axpby_d,  sq_diff_d, dot_d, sum_d, max_abs_d,
    add_f,   sub_f,    mul_f, scale_f, axpy_f, dot_f, sum_f,
};

}  // namespace

const Kernels* neon_kernels_impl() { return &table; }

}  // namespace mofu::kern

#else

namespace mofu::kern {
const Kernels* neon_kernels_impl() { return nullptr; }
}  // namespace mofu::kern

#endif
