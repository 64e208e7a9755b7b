// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstddef>

#include "mofu/kernels.hpp"

namespace mofu::kern {
namespace {

void add_d(std::size_t n, double* dst, const double* a, const double* b) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}
void sub_d(std::size_t n, double* dst, const double* a, const double* b) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}
void mul_d(std::size_t n, double* dst, const double* a, const double* b) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}
void muladd_d(std::size_t n, double* dst, const double* a, const double* b,
              const double* c) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i] + c[i];
}
void scale_d(std::size_t n, double* dst, const double* a, double s) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = s * a[i];
}
void affine_d(std::size_t n, double* dst, const double* a, double s, double t) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = s * a[i] + t;
}
void axpy_d(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}
void axpby_d(std::size_t n, double* dst, double a, const double* x, double b,
             const double* y) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a * x[i] + b * y[i];
}
void sq_diff_d(std::size_t n, double* dst, const double* a, const double* b) {
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    dst[i] = d * d;
  }
}
double dot_d(std::size_t n, const double* a, const double* b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}
double sum_d(std::size_t n, const double* a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}
double max_abs_d(std::size_t n, const double* a) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i]));
  return m;
}

void add_f(std::size_t n, float* dst, const float* a, const float* b) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}
void sub_f(std::size_t n, float* dst, const float* a, const float* b) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}
void mul_f(std::size_t n, float* dst, const float* a, const float* b) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}
void scale_f(std::size_t n, float* dst, const float* a, float s) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = s * a[i];
}
void axpy_f(std::size_t n, float a, const float* x, float* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}
float dot_f(std::size_t n, const float* a, const float* b) {
  float acc = 0.0f;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}
float sum_f(std::size_t n, const float* a) {
  float acc = 0.0f;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {
      "scalar", add_d,    sub_d, mul_d, muladd_d, scale_d, affine_d,
      axpy_d,   axpby_d,  sq_diff_d, dot_d, sum_d, max_abs_d,
      add_f,    sub_f,    mul_f, scale_f, axpy_f, dot_f, sum_f,
  };
  return k;
}

}  // namespace mofu::kern
