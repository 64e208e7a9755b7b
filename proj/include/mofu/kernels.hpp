// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>

namespace mofu::kern {

// Data-parallel inner loops behind every tensor operation. Each entry has a
// scalar reference implementation plus vector variants (AVX2 on x86-64, NEON
// on aarch64) selected once at startup. Elementwise kernels are bit-identical
// across variants (no fused multiply-add); reductions may reassociate and are
// equivalence-tested within tolerance.
struct Kernels {
  const char* name;

  // f64. dst may alias a or b.
  void (*add_d)(std::size_t n, double* dst, const double* a, const double* b);
  void (*sub_d)(std::size_t n, double* dst, const double* a, const double* b);
  void (*mul_d)(std::size_t n, double* dst, const double* a, const double* b);
  // dst[i] = a[i]*b[i] + c[i]
  void (*muladd_d)(std::size_t n, double* dst, const double* a, const double* b,
                   const double* c);
  // dst[i] = s*a[i]
  void (*scale_d)(std::size_t n, double* dst, const double* a, double s);
  // dst[i] = s*a[i] + t
  void (*affine_d)(std::size_t n, double* dst, const double* a, double s,
                   double t);
  // y[i] += a*x[i]
  void (*axpy_d)(std::size_t n, double a, const double* x, double* y);
  // dst[i] = a*x[i] + b*y[i]
  void (*axpby_d)(std::size_t n, double* dst, double a, const double* x,
                  double b, const double* y);
  // dst[i] = (a[i]-b[i])^2
  void (*sq_diff_d)(std::size_t n, double* dst, const double* a,
                    const double* b);
  double (*dot_d)(std::size_t n, const double* a, const double* b);
  double (*sum_d)(std::size_t n, const double* a);
  double (*max_abs_d)(std::size_t n, const double* a);

  // f32 variants (training fast path; not used by the f64 default pipeline).
  void (*add_f)(std::size_t n, float* dst, const float* a, const float* b);
  void (*sub_f)(std::size_t n, float* dst, const float* a, const float* b);
  void (*mul_f)(std::size_t n, float* dst, const float* a, const float* b);
  void (*scale_f)(std::size_t n, float* dst, const float* a, float s);
  void (*axpy_f)(std::size_t n, float a, const float* x, float* y);
  float (*dot_f)(std::size_t n, const float* a, const float* b);
  float (*sum_f)(std::size_t n, const float* a);
};

/// Reference implementation; always available.
const Kernels& scalar_kernels();

/// Vector variants; nullptr when the build or the running CPU lacks them.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

/// Table selected at first use. Honors MOFU_SIMD=auto|scalar|avx2|neon.
const Kernels& kernels();

std::string active_kernel_name();

}  // namespace mofu::kern
