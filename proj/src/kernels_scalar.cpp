#include <vector>

#include "qpc/kernels/kernels.hpp"

namespace qpc::kern {
namespace {

void mul_scalar(const double* a, const double* b, double* c, int n) {
  for (int i = 0; i < n; ++i) {
    const double* ai = a + size_t(i) * n;
    double* ci = c + size_t(i) * n;
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += ai[k] * b[size_t(k) * n + j];
      ci[j] = s;
    }
  }
}

void bracket_scalar(const double* a, const double* b, double* c, int n) {
  thread_local std::vector<double> tmp;
  tmp.resize(size_t(n) * n);
  mul_scalar(a, b, c, n);
  mul_scalar(b, a, tmp.data(), n);
  for (size_t i = 0; i < size_t(n) * n; ++i) c[i] -= tmp[i];
}

double frob2_scalar(const double* a, int len) {
  double s = 0.0;
  for (int i = 0; i < len; ++i) s += a[i] * a[i];
  return s;
}

double dot_scalar(const double* a, const double* b, int len) {
  double s = 0.0;
  for (int i = 0; i < len; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double t, const double* x, double* y, int len) {
  for (int i = 0; i < len; ++i) y[i] += t * x[i];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", mul_scalar, bracket_scalar, frob2_scalar, dot_scalar, axpy_scalar};
  return ops;
}

}  // namespace qpc::kern
