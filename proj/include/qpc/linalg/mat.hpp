#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "qpc/exact/complexish.hpp"
#include "qpc/kernels/kernels.hpp"

namespace qpc {

/// Dense matrix over an arbitrary scalar.  Doubles route products and
/// brackets through the runtime-selected kernel backend; exact scalars use
/// the generic loops.
template <class F>
class Mat {
 public:
  Mat() = default;
  Mat(int r, int c) : r_(r), c_(c), a_(size_t(r) * size_t(c), F(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const F& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  F* data() { return a_.data(); }
  const F* data() const { return a_.data(); }

  Mat operator-() const {
    Mat m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  Mat& operator+=(const Mat& o) {
    assert(r_ == o.r_ && c_ == o.c_);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    assert(r_ == o.r_ && c_ == o.c_);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Mat& operator*=(const F& t) {
    for (auto& x : a_) x *= t;
    return *this;
  }
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(Mat x, const F& t) { return x *= t; }
  friend Mat operator*(const F& t, Mat x) { return x *= t; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    assert(x.c_ == y.r_);
    Mat out(x.r_, y.c_);
    if constexpr (std::is_same_v<F, double>) {
      if (x.r_ == x.c_ && y.r_ == y.c_) {
        kern::ops().mul(x.data(), y.data(), out.data(), x.r_);
        return out;
      }
    }
    for (int i = 0; i < x.r_; ++i)
      for (int j = 0; j < y.c_; ++j) {
        F s(0);
        for (int k = 0; k < x.c_; ++k) s += x.at(i, k) * y.at(k, j);
        out.at(i, j) = s;
      }
    return out;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

  Mat transposed() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }
  Mat adjoint() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(j, i) = conj_of(at(i, j));
    return m;
  }
  F trace() const {
    F s(0);
    for (int i = 0; i < r_ && i < c_; ++i) s += at(i, i);
    return s;
  }
  bool all_zero() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<F> a_;
};

template <class F>
Mat<F> bracket(const Mat<F>& x, const Mat<F>& y) {
  if constexpr (std::is_same_v<F, double>) {
    Mat<F> out(x.rows(), x.cols());
    kern::ops().bracket(x.data(), y.data(), out.data(), x.rows());
    return out;
  } else {
    return x * y - y * x;
  }
}

template <class F> struct real_scalar { using type = F; };
template <class F> struct real_scalar<Cx<F>> { using type = F; };
template <class F> using real_scalar_t = typename real_scalar<F>::type;

/// Bi-invariant pairing <X,Y>_0 = -Re tr(XY).  `half` divides by two, used
/// when complex matrices are handled in realified form.
template <class F>
real_scalar_t<F> inner0(const Mat<F>& x, const Mat<F>& y) {
  F s(0);
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) s += x.at(i, k) * y.at(k, i);
  return -re_of(s);
}

/// <X,X>_0; equals the squared Frobenius norm for skew-symmetric /
/// skew-Hermitian input.
template <class F>
real_scalar_t<F> norm0_sq(const Mat<F>& x) {
  return inner0(x, x);
}

/// Right nullspace basis.  Exact scalars pivot on the first nonzero entry;
/// doubles use partial pivoting with a relative threshold.
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m, double eps = 1e-11) {
  const int r = m.rows(), c = m.cols();
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int piv = -1;
    if constexpr (std::is_same_v<F, double>) {
      double best = 0;
      for (int i = row; i < r; ++i)
        if (std::abs(m.at(i, col)) > best) { best = std::abs(m.at(i, col)); piv = i; }
      if (best <= eps) piv = -1;
    } else {
      for (int i = row; i < r; ++i)
        if (!is_zero(m.at(i, col))) { piv = i; break; }
    }
    if (piv < 0) continue;
    for (int j = 0; j < c; ++j) std::swap(m.at(row, j), m.at(piv, j));
    F inv = F(1) / m.at(row, col);
    for (int j = 0; j < c; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row) continue;
      F f = m.at(i, col);
      if (is_zero(f)) continue;
      for (int j = 0; j < c; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(c, false);
  for (int pc : pivot_col) is_pivot[pc] = true;
  std::vector<std::vector<F>> basis;
  for (int fc = 0; fc < c; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<F> v(c, F(0));
    v[fc] = F(1);
    for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m.at(int(k), fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
int rank_of(const Mat<F>& m, double eps = 1e-11) {
  return m.cols() - int(nullspace(m, eps).size());
}

}  // namespace qpc
