// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstddef>

#include "braidrl/kernels.hpp"

namespace braidrl::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void relu_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_grad_scalar(const double* pre, double* d, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (pre[i] <= 0.0) d[i] = 0.0;
  }
}

void adam_step_scalar(double* p, double* m, double* v, const double* g, std::size_t n,
                      double lr, double beta1, double beta2, double eps, double inv_bc1,
                      double inv_bc2) {
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    const double m_hat = m[i] * inv_bc1;
    const double v_hat = v[i] * inv_bc2;
    p[i] -= lr * m_hat / (std::sqrt(v_hat) + eps);
  }
}

} // namespace

const Backend& scalar_backend() {
  static const Backend backend = {
      "scalar", dot_scalar, axpy_scalar, relu_scalar, relu_grad_scalar, adam_step_scalar,
  };
  return backend;
}

} // namespace braidrl::kernels
