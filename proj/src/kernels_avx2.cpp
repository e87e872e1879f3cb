// AVX2 variants of the inner-loop kernels.  mul/bracket vectorize over the
// output column index with the k-accumulation kept in scalar order, so every
// element sees the same sequence of IEEE operations as the scalar backend
// (bit-identical; the build disables FMA contraction).  The reductions use
// four parallel accumulators and differ from scalar only by reassociation.

#include <immintrin.h>

#include <vector>

#include "qpc/kernels/kernels.hpp"

namespace qpc::kern {
namespace {

void mul_avx2(const double* a, const double* b, double* c, int n) {
  const int n4 = n & ~3;
  for (int i = 0; i < n; ++i) {
    const double* ai = a + size_t(i) * n;
    double* ci = c + size_t(i) * n;
    int j = 0;
    for (; j < n4; j += 4) {
      __m256d acc = _mm256_setzero_pd();
      for (int k = 0; k < n; ++k) {
        __m256d av = _mm256_set1_pd(ai[k]);
        __m256d bv = _mm256_loadu_pd(b + size_t(k) * n + j);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(av, bv));
      }
      _mm256_storeu_pd(ci + j, acc);
    }
    for (; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += ai[k] * b[size_t(k) * n + j];
      ci[j] = s;
    }
  }
}

void bracket_avx2(const double* a, const double* b, double* c, int n) {
  thread_local std::vector<double> tmp;
  tmp.resize(size_t(n) * n);
  mul_avx2(a, b, c, n);
  mul_avx2(b, a, tmp.data(), n);
  size_t len = size_t(n) * n, i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d cv = _mm256_loadu_pd(c + i);
    __m256d tv = _mm256_loadu_pd(tmp.data() + i);
    _mm256_storeu_pd(c + i, _mm256_sub_pd(cv, tv));
  }
  for (; i < len; ++i) c[i] -= tmp[i];
}

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

double frob2_avx2(const double* a, int len) {
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d v = _mm256_loadu_pd(a + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double s = hsum(acc);
  for (; i < len; ++i) s += a[i] * a[i];
  return s;
}

double dot_avx2(const double* a, const double* b, int len) {
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d av = _mm256_loadu_pd(a + i);
    __m256d bv = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(av, bv));
  }
  double s = hsum(acc);
  for (; i < len; ++i) s += a[i] * b[i];
  return s;
}

void axpy_avx2(double t, const double* x, double* y, int len) {
  __m256d tv = _mm256_set1_pd(t);
  int i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d yv = _mm256_loadu_pd(y + i);
    __m256d xv = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(yv, _mm256_mul_pd(tv, xv)));
  }
  for (; i < len; ++i) y[i] += t * x[i];
}

}  // namespace

const Ops* avx2_ops_if_supported() {
#if defined(__GNUC__) || defined(__clang__)
  if (!__builtin_cpu_supports("avx2")) return nullptr;
#endif
  static const Ops ops{"avx2", mul_avx2, bracket_avx2, frob2_avx2, dot_avx2, axpy_avx2};
  return &ops;
}

}  // namespace qpc::kern
