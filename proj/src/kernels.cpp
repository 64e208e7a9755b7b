// SPDX-License-Identifier: Apache-2.0
#include "mofu/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mofu::kern {

const Kernels* avx2_kernels_impl();
const Kernels* neon_kernels_impl();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Kernels& select() {
  const char* env = std::getenv("MOFU_SIMD");
  const std::string mode = env ? env : "auto";
  if (mode == "scalar") return scalar_kernels();
  if (mode == "avx2") {
    const Kernels* k = avx2_kernels();
    if (!k) throw std::runtime_error("MOFU_SIMD=avx2 requested but AVX2 is unavailable");
    return *k;
  }
  if (mode == "neon") {
    const Kernels* k = neon_kernels();
    if (!k) throw std::runtime_error("MOFU_SIMD=neon requested but NEON is unavailable");
    return *k;
  }
  if (mode != "auto")
    throw std::runtime_error("unknown MOFU_SIMD value: " + mode);
  if (const Kernels* k = avx2_kernels()) return *k;
  if (const Kernels* k = neon_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const Kernels* avx2_kernels() {
  return cpu_has_avx2() ? avx2_kernels_impl() : nullptr;
}

const Kernels* neon_kernels() { return neon_kernels_impl(); }

const Kernels& kernels() {
  static const Kernels& k = select();
  return k;
}

std::string active_kernel_name() { return kernels().name; }

}  // namespace mofu::kern
