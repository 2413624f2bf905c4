// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include "braidrl/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace braidrl::kernels {

namespace {

const Backend* detect() {
#if defined(BRAIDRL_HAVE_AVX2)
  if (avx2_supported()) return &avx2_backend();
#endif
#if defined(BRAIDRL_HAVE_NEON)
  return &neon_backend();
#endif
  return &scalar_backend();
}

const Backend* resolve(std::string_view name) {
  if (name == "auto") return detect();
  if (name == "scalar") return &scalar_backend();
#if defined(BRAIDRL_HAVE_AVX2)
  if (name == "avx2") {
    if (!avx2_supported()) throw std::invalid_argument("avx2 kernels not supported by this CPU");
    return &avx2_backend();
  }
#endif
#if defined(BRAIDRL_HAVE_NEON)
  if (name == "neon") return &neon_backend();
#endif
  throw std::invalid_argument("unknown kernel backend: " + std::string(name));
}

std::atomic<const Backend*> g_active{nullptr};

const Backend* init_active() {
  const char* env = std::getenv("BRAIDRL_KERNELS");
  const Backend* b = env ? resolve(env) : detect();
  g_active.store(b, std::memory_order_release);
  return b;
}

} // namespace

const Backend& active() {
  const Backend* b = g_active.load(std::memory_order_acquire);
  if (!b) b = init_active();
  return *b;
}

std::string_view select(std::string_view name) {
  const Backend* b = resolve(name);
  g_active.store(b, std::memory_order_release);
  return b->name;
}

void gemv(const double* w, const double* x, double* y, std::size_t rows, std::size_t cols) {
  const Backend& b = active();
  for (std::size_t r = 0; r < rows; ++r) {
    y[r] = b.dot(w + r * cols, x, cols);
  }
}

void gemv_t_accum(const double* w, const double* dy, double* dx, std::size_t rows,
                  std::size_t cols) {
  const Backend& b = active();
  for (std::size_t r = 0; r < rows; ++r) {
    if (dy[r] != 0.0) b.axpy(dy[r], w + r * cols, dx, cols);
  }
}

void ger_accum(double* w, const double* dy, const double* x, std::size_t rows,
               std::size_t cols) {
  const Backend& b = active();
  for (std::size_t r = 0; r < rows; ++r) {
    if (dy[r] != 0.0) b.axpy(dy[r], x, w + r * cols, cols);
  }
}

} // namespace braidrl::kernels
