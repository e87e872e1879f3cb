#pragma once

#include <array>
#include <cmath>
#include <cstdlib>

#include "qpc/exact/rational.hpp"

namespace qpc {

/// Element of the 8-dimensional Cayley algebra on the basis
/// {1, i, j, k, l, il, jl, kl}, written as a pair of quaternions a + b*l.
/// Works over doubles (search mode) and exact rationals (proof mode).
template <class F>
struct Octonion {
  std::array<F, 8> c{};

  static Octonion unit(int idx) {
    Octonion o;
    o.c[idx] = F(1);
    return o;
  }

  Octonion operator-() const {
    Octonion o;
    for (int i = 0; i < 8; ++i) o.c[i] = -c[i];
    return o;
  }
  Octonion& operator+=(const Octonion& x) {
    for (int i = 0; i < 8; ++i) c[i] += x.c[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& x) {
    for (int i = 0; i < 8; ++i) c[i] -= x.c[i];
    return *this;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
};

namespace detail {
// Hamilton product on (1, i, j, k) coordinates.
template <class F>
std::array<F, 4> quat_mul(const std::array<F, 4>& a, const std::array<F, 4>& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}
template <class F>
std::array<F, 4> quat_conj(const std::array<F, 4>& a) {
  return {a[0], -a[1], -a[2], -a[3]};
}
}  // namespace detail

/// Cayley product:  (a + b l)(c + d l) = (ac - conj(d) b) + (da + b conj(c)) l.
template <class F>
Octonion<F> oct_mul(const Octonion<F>& x, const Octonion<F>& y) {
  using detail::quat_conj;
  using detail::quat_mul;
  std::array<F, 4> a{x.c[0], x.c[1], x.c[2], x.c[3]}, b{x.c[4], x.c[5], x.c[6], x.c[7]};
  std::array<F, 4> c{y.c[0], y.c[1], y.c[2], y.c[3]}, d{y.c[4], y.c[5], y.c[6], y.c[7]};
  auto lo = quat_mul(a, c);
  auto t = quat_mul(quat_conj(d), b);
  auto hi = quat_mul(d, a);
  auto u = quat_mul(b, quat_conj(c));
  Octonion<F> out;
  for (int i = 0; i < 4; ++i) {
    out.c[i] = lo[i] - t[i];
    out.c[i + 4] = hi[i] + u[i];
  }
  return out;
}

template <class F>
F norm_sq(const Octonion<F>& x) {
  F s(0);
  for (int i = 0; i < 8; ++i) s += x.c[i] * x.c[i];
  return s;
}

inline double norm(const Octonion<double>& x) { return std::sqrt(norm_sq(x)); }

/// Signed basis index of a product of unit octonions:
/// e_i * e_j = sign * e_index.  Derived once from oct_mul over the rationals.
struct BasisProduct {
  int sign;
  int index;
};
BasisProduct oct_basis_product(int i, int j);

}  // namespace qpc
