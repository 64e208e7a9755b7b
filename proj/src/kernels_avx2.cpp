// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernel variants. Compiled with -mavx2 only (no -mfma): elementwise
// kernels round exactly like the scalar reference, so cross-variant tests can
// assert bit equality. Reductions use one vector accumulator and differ from
// scalar only by summation order.
#include "mofu/kernels.hpp"

#if defined(MOFU_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))

#include <immintrin.h>

#include <cmath>

namespace mofu::kern {
namespace {

void add_d(std::size_t n, double* dst, const double* a, const double* b) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(a + i),
                                            _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] + b[i];
}
void sub_d(std::size_t n, double* dst, const double* a, const double* b) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_sub_pd(_mm256_loadu_pd(a + i),
                                            _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] - b[i];
}
void mul_d(std::size_t n, double* dst, const double* a, const double* b) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                            _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}
void muladd_d(std::size_t n, double* dst, const double* a, const double* b,
              const double* c) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d p = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(dst + i, _mm256_add_pd(p, _mm256_loadu_pd(c + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i] + c[i];
}
void scale_d(std::size_t n, double* dst, const double* a, double s) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(vs, _mm256_loadu_pd(a + i)));
  }
  for (; i < n; ++i) dst[i] = s * a[i];
}
void affine_d(std::size_t n, double* dst, const double* a, double s, double t) {
  const __m256d vs = _mm256_set1_pd(s);
  const __m256d vt = _mm256_set1_pd(t);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(
        dst + i, _mm256_add_pd(_mm256_mul_pd(vs, _mm256_loadu_pd(a + i)), vt));
  }
  for (; i < n; ++i) dst[i] = s * a[i] + t;
}
void axpy_d(std::size_t n, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), p));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}
void axpby_d(std::size_t n, double* dst, double a, const double* x, double b,
             const double* y) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    __m256d q = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(dst + i, _mm256_add_pd(p, q));
  }
  for (; i < n; ++i) dst[i] = a * x[i] + b * y[i];
}
void sq_diff_d(std::size_t n, double* dst, const double* a, const double* b) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(d, d));
  }
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    dst[i] = d * d;
  }
}

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_d(std::size_t n, const double* a, const double* b) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double res = hsum(acc);
  for (; i < n; ++i) res += a[i] * b[i];
  return res;
}
double sum_d(std::size_t n, const double* a) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double res = hsum(acc);
  for (; i < n; ++i) res += a[i];
  return res;
}
double max_abs_d(std::size_t n, const double* a) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc,
                        _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(a + i)));
  }
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  lo = _mm_max_pd(lo, hi);
  double m = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
  for (; i < n; ++i) m = std::max(m, std::fabs(a[i]));
  return m;
}

void add_f(std::size_t n, float* dst, const float* a, const float* b) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(dst + i, _mm256_add_ps(_mm256_loadu_ps(a + i),
                                            _mm256_loadu_ps(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] + b[i];
}
void sub_f(std::size_t n, float* dst, const float* a, const float* b) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(dst + i, _mm256_sub_ps(_mm256_loadu_ps(a + i),
                                            _mm256_loadu_ps(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] - b[i];
}
void mul_f(std::size_t n, float* dst, const float* a, const float* b) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(dst + i, _mm256_mul_ps(_mm256_loadu_ps(a + i),
                                            _mm256_loadu_ps(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}
void scale_f(std::size_t n, float* dst, const float* a, float s) {
  const __m256 vs = _mm256_set1_ps(s);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(dst + i, _mm256_mul_ps(vs, _mm256_loadu_ps(a + i)));
  }
  for (; i < n; ++i) dst[i] = s * a[i];
}
void axpy_f(std::size_t n, float a, const float* x, float* y) {
  const __m256 va = _mm256_set1_ps(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 p = _mm256_mul_ps(va, _mm256_loadu_ps(x + i));
    _mm256_storeu_ps(y + i, _mm256_add_ps(_mm256_loadu_ps(y + i), p));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}
float hsum_f(__m256 v) {
  __m128 lo = _mm256_castps256_ps128(v);
  __m128 hi = _mm256_extractf128_ps(v, 1);
  lo = _mm_add_ps(lo, hi);
  __m128 sh = _mm_movehdup_ps(lo);
  __m128 s = _mm_add_ps(lo, sh);
  sh = _mm_movehl_ps(sh, s);
  return _mm_cvtss_f32(_mm_add_ss(s, sh));
}
float dot_f(std::size_t n, const float* a, const float* b) {
  __m256 acc = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc = _mm256_add_ps(
        acc, _mm256_mul_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
  }
  float res = hsum_f(acc);
  for (; i < n; ++i) res += a[i] * b[i];
  return res;
}
float sum_f(std::size_t n, const float* a) {
  __m256 acc = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) acc = _mm256_add_ps(acc, _mm256_loadu_ps(a + i));
  float res = hsum_f(acc);
  for (; i < n; ++i) res += a[i];
  return res;
}

const Kernels table = {
    "avx2",  add_d,    sub_d, mul_d, muladd_d, scale_d, affine_d,
    axpy_d,  axpby_d,  sq_diff_d, dot_d, sum_d, max_abs_d,
    add_f,   sub_f,    mul_f, scale_f, axpy_f, dot_f, sum_f,
};

}  // namespace

const Kernels* avx2_kernels_impl() { return &table; }

}  // namespace mofu::kern

#else

namespace mofu::kern {
const Kernels* avx2_kernels_impl() { return nullptr; }
}  // namespace mofu::kern

#endif
