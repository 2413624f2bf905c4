// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

// NEON variants for aarch64 (f64 lanes are baseline there, no runtime probe
// needed beyond the architecture itself).

#include "braidrl/kernels.hpp"

#if defined(BRAIDRL_HAVE_NEON)

#include <arm_neon.h>

#include <cmath>

namespace braidrl::kernels {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void relu_neon(const double* x, double* y, std::size_t n) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vmaxq_f64(vld1q_f64(x + i), zero));
  }
  for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_grad_neon(const double* pre, double* d, std::size_t n) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t keep = vcgtq_f64(vld1q_f64(pre + i), zero);
    const uint64x2_t masked = vandq_u64(vreinterpretq_u64_f64(vld1q_f64(d + i)), keep);
    vst1q_f64(d + i, vreinterpretq_f64_u64(masked));
  }
  for (; i < n; ++i) {
    if (pre[i] <= 0.0) d[i] = 0.0;
  }
}

void adam_step_neon(double* p, double* m, double* v, const double* g, std::size_t n,
                    double lr, double beta1, double beta2, double eps, double inv_bc1,
                    double inv_bc2) {
  const float64x2_t vb1 = vdupq_n_f64(beta1);
  const float64x2_t vb1c = vdupq_n_f64(1.0 - beta1);
  const float64x2_t vb2 = vdupq_n_f64(beta2);
  const float64x2_t vb2c = vdupq_n_f64(1.0 - beta2);
  const float64x2_t vlr = vdupq_n_f64(lr);
  const float64x2_t veps = vdupq_n_f64(eps);
  const float64x2_t vbc1 = vdupq_n_f64(inv_bc1);
  const float64x2_t vbc2 = vdupq_n_f64(inv_bc2);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vg = vld1q_f64(g + i);
    float64x2_t vm = vfmaq_f64(vmulq_f64(vb1, vld1q_f64(m + i)), vb1c, vg);
    float64x2_t vv =
        vfmaq_f64(vmulq_f64(vb2, vld1q_f64(v + i)), vb2c, vmulq_f64(vg, vg));
    vst1q_f64(m + i, vm);
    vst1q_f64(v + i, vv);
    const float64x2_t m_hat = vmulq_f64(vm, vbc1);
    const float64x2_t v_hat = vmulq_f64(vv, vbc2);
    const float64x2_t denom = vaddq_f64(vsqrtq_f64(v_hat), veps);
    const float64x2_t step = vdivq_f64(vmulq_f64(vlr, m_hat), denom);
    vst1q_f64(p + i, vsubq_f64(vld1q_f64(p + i), step));
  }
  if (i < n) {
    scalar_backend().adam_step(p + i, m + i, v + i, g + i, n - i, lr, beta1, beta2, eps,
                               inv_bc1, inv_bc2);
  }
}

} // namespace

const Backend& neon_backend() {
  static const Backend backend = {
      "neon", dot_neon, axpy_neon, relu_neon, relu_grad_neon, adam_step_neon,
  };
  return backend;
}

} // namespace braidrl::kernels

#endif // BRAIDRL_HAVE_NEON
