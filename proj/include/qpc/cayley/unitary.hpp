#pragma once

#include <stdexcept>
#include <vector>

#include "qpc/exact/complexish.hpp"
#include "qpc/linalg/mat.hpp"

namespace qpc {

// Chain u(n+1) = p + k, k = u(1) + u(n), with the second step
// u(n) = m + (u(1) + u(n-1)) inside k.  All projections are coordinate
// masks, so they are exact for every scalar.
//
//   p : first row/column off-diagonal block (x in C^n)
//   m : second row/column off-diagonal block within u(n) (y in C^{n-1})
//   h : diag(ia, ib, B) with B in u(n-1)

template <class CF>
struct UComps {
  Mat<CF> p, m, h;
};

template <class CF>
UComps<CF> unitary_decompose(const Mat<CF>& x, int n) {
  const int N = n + 1;
  if (x.rows() != N || x.cols() != N) throw std::invalid_argument("matrix size does not match chain");
  UComps<CF> out{Mat<CF>(N, N), Mat<CF>(N, N), Mat<CF>(N, N)};
  for (int j = 1; j < N; ++j) {
    out.p.at(0, j) = x.at(0, j);
    out.p.at(j, 0) = x.at(j, 0);
  }
  for (int j = 2; j < N; ++j) {
    out.m.at(1, j) = x.at(1, j);
    out.m.at(j, 1) = x.at(j, 1);
  }
  out.h.at(0, 0) = x.at(0, 0);
  out.h.at(1, 1) = x.at(1, 1);
  for (int i = 2; i < N; ++i)
    for (int j = 2; j < N; ++j) out.h.at(i, j) = x.at(i, j);
  return out;
}

/// u(n-1) part of the h component (lower (n-1)x(n-1) block).
template <class CF>
Mat<CF> unitary_unm1_part(const Mat<CF>& x, int n) {
  const int N = n + 1;
  Mat<CF> out(N, N);
  for (int i = 2; i < N; ++i)
    for (int j = 2; j < N; ++j) out.at(i, j) = x.at(i, j);
  return out;
}

/// Real basis of u(N): iE_jj, E_jk - E_kj, i(E_jk + E_kj).
template <class CF>
std::vector<Mat<CF>> unitary_basis(int N) {
  std::vector<Mat<CF>> out;
  const CF i = CF::i();
  for (int j = 0; j < N; ++j) {
    Mat<CF> d(N, N);
    d.at(j, j) = i;
    out.push_back(d);
  }
  for (int j = 0; j < N; ++j)
    for (int k = j + 1; k < N; ++k) {
      Mat<CF> a(N, N);
      a.at(j, k) = CF(1);
      a.at(k, j) = CF(-1);
      out.push_back(a);
      Mat<CF> s(N, N);
      s.at(j, k) = i;
      s.at(k, j) = i;
      out.push_back(s);
    }
  return out;
}

/// Realification: a+bi -> [[a,-b],[b,a]] blocks.  tr(realify(M)) = 2 Re tr(M),
/// so <X,Y>_0 = -Re tr(XY) becomes -tr(.)/2 on realified matrices.
template <class F>
Mat<double> realify(const Mat<Cx<F>>& m) {
  Mat<double> out(2 * m.rows(), 2 * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      double a = to_double(m.at(i, j).re), b = to_double(m.at(i, j).im);
      out.at(2 * i, 2 * j) = a;
      out.at(2 * i, 2 * j + 1) = -b;
      out.at(2 * i + 1, 2 * j) = b;
      out.at(2 * i + 1, 2 * j + 1) = a;
    }
  return out;
}

/// Realified component masks (same block pattern, doubled indices).
struct URealComps {
  Mat<double> p, m, h;
};

inline URealComps unitary_decompose_real(const Mat<double>& x, int n) {
  const int N = n + 1, D = 2 * N;
  if (x.rows() != D || x.cols() != D) throw std::invalid_argument("matrix size does not match chain");
  URealComps out{Mat<double>(D, D), Mat<double>(D, D), Mat<double>(D, D)};
  auto copy_block = [&](Mat<double>& dst, int bi, int bj) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) dst.at(2 * bi + a, 2 * bj + b) = x.at(2 * bi + a, 2 * bj + b);
  };
  for (int j = 1; j < N; ++j) {
    copy_block(out.p, 0, j);
    copy_block(out.p, j, 0);
  }
  for (int j = 2; j < N; ++j) {
    copy_block(out.m, 1, j);
    copy_block(out.m, j, 1);
  }
  copy_block(out.h, 0, 0);
  copy_block(out.h, 1, 1);
  for (int i = 2; i < N; ++i)
    for (int j = 2; j < N; ++j) copy_block(out.h, i, j);
  return out;
}

}  // namespace qpc
