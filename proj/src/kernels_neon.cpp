// NEON variants, mirroring the AVX2 backend with 2-wide double lanes.
// Same contract: mul/bracket keep scalar accumulation order per element.

#include <arm_neon.h>

#include <vector>

#include "qpc/kernels/kernels.hpp"

namespace qpc::kern {
namespace {

void mul_neon(const double* a, const double* b, double* c, int n) {
  const int n2 = n & ~1;
  for (int i = 0; i < n; ++i) {
    const double* ai = a + size_t(i) * n;
    double* ci = c + size_t(i) * n;
    int j = 0;
    for (; j < n2; j += 2) {
      float64x2_t acc = vdupq_n_f64(0.0);
      for (int k = 0; k < n; ++k) {
        float64x2_t av = vdupq_n_f64(ai[k]);
        float64x2_t bv = vld1q_f64(b + size_t(k) * n + j);
        acc = vaddq_f64(acc, vmulq_f64(av, bv));
      }
      vst1q_f64(ci + j, acc);
    }
    for (; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += ai[k] * b[size_t(k) * n + j];
      ci[j] = s;
    }
  }
}

void bracket_neon(const double* a, const double* b, double* c, int n) {
  thread_local std::vector<double> tmp;
  tmp.resize(size_t(n) * n);
  mul_neon(a, b, c, n);
  mul_neon(b, a, tmp.data(), n);
  for (size_t i = 0; i < size_t(n) * n; ++i) c[i] -= tmp[i];
}

double frob2_neon(const double* a, int len) {
  float64x2_t acc = vdupq_n_f64(0.0);
  int i = 0;
  for (; i + 2 <= len; i += 2) {
    float64x2_t v = vld1q_f64(a + i);
    acc = vaddq_f64(acc, vmulq_f64(v, v));
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < len; ++i) s += a[i] * a[i];
  return s;
}

double dot_neon(const double* a, const double* b, int len) {
  float64x2_t acc = vdupq_n_f64(0.0);
  int i = 0;
  for (; i + 2 <= len; i += 2) {
    acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < len; ++i) s += a[i] * b[i];
  return s;
}

void axpy_neon(double t, const double* x, double* y, int len) {
  float64x2_t tv = vdupq_n_f64(t);
  int i = 0;
  for (; i + 2 <= len; i += 2) {
    float64x2_t yv = vld1q_f64(y + i);
    float64x2_t xv = vld1q_f64(x + i);
    vst1q_f64(y + i, vaddq_f64(yv, vmulq_f64(tv, xv)));
  }
  for (; i < len; ++i) y[i] += t * x[i];
}

}  // namespace

const Ops* neon_ops_if_supported() {
  static const Ops ops{"neon", mul_neon, bracket_neon, frob2_neon, dot_neon, axpy_neon};
  return &ops;
}

}  // namespace qpc::kern
