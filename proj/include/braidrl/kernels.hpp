// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>

namespace braidrl::kernels {

/// Double-precision kernels behind the policy-network math. Every entry has
/// a scalar reference implementation; SIMD variants (AVX2 on x86-64, NEON on
/// aarch64) are selected at runtime and equivalence-tested against scalar.
struct Backend {
  const char* name;

  /// sum(a[i] * b[i])
  double (*dot)(const double* a, const double* b, std::size_t n);

  /// y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);

  /// y[i] = max(x[i], 0)
  void (*relu)(const double* x, double* y, std::size_t n);

  /// d[i] = pre[i] > 0 ? d[i] : 0   (backprop through relu)
  void (*relu_grad)(const double* pre, double* d, std::size_t n);

  /// One Adam step over n parameters. inv_bc1/inv_bc2 are the bias
  /// corrections 1/(1-beta1^t), 1/(1-beta2^t).
  void (*adam_step)(double* p, double* m, double* v, const double* g, std::size_t n,
                    double lr, double beta1, double beta2, double eps, double inv_bc1,
                    double inv_bc2);
};

const Backend& scalar_backend();

#if defined(BRAIDRL_HAVE_AVX2)
const Backend& avx2_backend();
bool avx2_supported();
#endif
#if defined(BRAIDRL_HAVE_NEON)
const Backend& neon_backend();
#endif

/// The backend in use. First call picks the widest SIMD variant the CPU
/// supports, unless the BRAIDRL_KERNELS environment variable ("scalar",
/// "avx2", "neon", "auto") says otherwise.
const Backend& active();

/// Force a backend by name; "auto" re-runs detection. Returns the name of
/// the backend now active. Throws std::invalid_argument for unknown or
/// unavailable names.
std::string_view select(std::string_view name);

// Row-major matrix helpers over the active backend.

/// y = W x, W is rows x cols.
void gemv(const double* w, const double* x, double* y, std::size_t rows, std::size_t cols);

/// dx = W^T dy, W is rows x cols. dx must be zeroed by the caller.
void gemv_t_accum(const double* w, const double* dy, double* dx, std::size_t rows,
                  std::size_t cols);

/// W += dy x^T (rank-one update into a rows x cols matrix).
void ger_accum(double* w, const double* dy, const double* x, std::size_t rows,
               std::size_t cols);

} // namespace braidrl::kernels
