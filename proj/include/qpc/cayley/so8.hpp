#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpc/cayley/octonion.hpp"
#include "qpc/exact/rational.hpp"
#include "qpc/linalg/mat.hpp"

namespace qpc {

// Reductive chain so(8) = p + so(7),  so(7) = m + g2, orthogonal for
// <X,Y>_0 = -tr(XY).  so(7) sits in so(8) as the stabilizer of the first
// coordinate, and g2 inside so(7) is cut out by seven linear relations.

/// Element of p: first row w, first column -w^t, zero elsewhere.
template <class F>
Mat<F> so8_p(const std::array<F, 7>& w) {
  Mat<F> x(8, 8);
  for (int j = 0; j < 7; ++j) {
    x.at(0, j + 1) = w[j];
    x.at(j + 1, 0) = -w[j];
  }
  return x;
}

/// Element of m, parametrized by v in R^7 (7x7 block inside so(7)).
template <class F>
Mat<F> so7_m(const std::array<F, 7>& v) {
  const F z(0);
  const F& a = v[0]; const F& b = v[1]; const F& c = v[2]; const F& d = v[3];
  const F& e = v[4]; const F& f = v[5]; const F& g = v[6];
  const F rows[7][7] = {
      {z, a, b, c, d, e, f},
      {-a, z, g, f, -e, d, -c},
      {-b, -g, z, -e, -f, c, d},
      {-c, -f, e, z, g, -b, a},
      {-d, e, f, -g, z, -a, -b},
      {-e, -d, -c, b, a, z, -g},
      {-f, c, -d, -a, b, g, z}};
  Mat<F> m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m.at(i, j) = rows[i][j];
  return m;
}

/// The 14-parameter g2 matrix inside so(7).
template <class F>
Mat<F> g2_matrix(const std::array<F, 6>& x, const std::array<F, 6>& y, const std::array<F, 2>& al) {
  const F z(0);
  const F x12 = x[0] + x[1], x34 = x[2] + x[3], x56 = x[4] + x[5];
  const F y12 = y[0] + y[1], y34 = y[2] + y[3], y56 = y[4] + y[5];
  const F a12 = al[0] + al[1];
  const F rows[7][7] = {
      {z, x12, y12, x34, y34, x56, y56},
      {-x12, z, al[0], -y[4], x[4], -y[2], x[2]},
      {-y12, -al[0], z, x[5], y[5], -x[3], -y[3]},
      {-x34, y[4], -x[5], z, al[1], y[0], -x[0]},
      {-y34, -x[4], -y[5], -al[1], z, x[1], y[1]},
      {-x56, y[2], x[3], -y[0], -x[1], z, a12},
      {-y56, -x[2], y[3], x[0], -y[1], -a12, z}};
  Mat<F> m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m.at(i, j) = rows[i][j];
  return m;
}

template <class F>
Mat<F> embed_so7(const Mat<F>& a) {
  if (a.rows() != 7 || a.cols() != 7) throw std::invalid_argument("expected a 7x7 matrix");
  Mat<F> m(8, 8);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m.at(i + 1, j + 1) = a.at(i, j);
  return m;
}

/// The 14 generators, one parameter of g2_matrix set to 1 each, ordered
/// (x1..x6, y1..y6, alpha1, alpha2).
template <class F>
std::vector<Mat<F>> g2_basis7() {
  std::vector<Mat<F>> out;
  out.reserve(14);
  for (int idx = 0; idx < 14; ++idx) {
    std::array<F, 6> x{}, y{};
    std::array<F, 2> a{};
    if (idx < 6) x[idx] = F(1);
    else if (idx < 12) y[idx - 6] = F(1);
    else a[idx - 12] = F(1);
    out.push_back(g2_matrix(x, y, a));
  }
  return out;
}

template <class F>
std::vector<Mat<F>> g2_basis8() {
  std::vector<Mat<F>> out;
  for (const auto& b : g2_basis7<F>()) out.push_back(embed_so7(b));
  return out;
}

template <class F>
std::vector<Mat<F>> so8_p_basis() {
  std::vector<Mat<F>> out;
  for (int i = 0; i < 7; ++i) {
    std::array<F, 7> w{};
    w[i] = F(1);
    out.push_back(so8_p(w));
  }
  return out;
}

template <class F>
std::vector<Mat<F>> so8_m_basis() {
  std::vector<Mat<F>> out;
  for (int i = 0; i < 7; ++i) {
    std::array<F, 7> v{};
    v[i] = F(1);
    out.push_back(embed_so7(so7_m(v)));
  }
  return out;
}

/// The seven linear relations cutting g2 out of so(7) (1-based entries
/// a_ij): each listed triple sums to zero.
inline const std::array<std::array<std::array<int, 2>, 3>, 7>& g2_relation_triples() {
  static const std::array<std::array<std::array<int, 2>, 3>, 7> rels{{
      {{{2, 3}, {4, 5}, {7, 6}}},
      {{{1, 2}, {4, 7}, {6, 5}}},
      {{{1, 3}, {6, 4}, {7, 5}}},
      {{{1, 4}, {7, 2}, {3, 6}}},
      {{{1, 5}, {2, 6}, {3, 7}}},
      {{{1, 6}, {5, 2}, {4, 3}}},
      {{{1, 7}, {2, 4}, {5, 3}}},
  }};
  return rels;
}

template <class F>
bool g2_relations_hold(const Mat<F>& a7) {
  if (a7.rows() != 7 || a7.cols() != 7) throw std::invalid_argument("expected a 7x7 matrix");
  for (const auto& rel : g2_relation_triples()) {
    F s(0);
    for (const auto& ij : rel) s += a7.at(ij[0] - 1, ij[1] - 1);
    if (!is_zero(s)) return false;
  }
  return true;
}

inline bool g2_relations_hold(const Mat<double>& a7, double tol) {
  for (const auto& rel : g2_relation_triples()) {
    double s = 0;
    for (const auto& ij : rel) s += a7.at(ij[0] - 1, ij[1] - 1);
    if (std::abs(s) > tol) return false;
  }
  return true;
}

/// Derivation test of a 7x7 matrix acting on span{e1..e7} (zero on e0):
/// D(uv) = D(u)v + u D(v) over all 49 basis pairs.  Exact scalars compare
/// exactly; the double overload takes a tolerance.
template <class F>
  requires(!std::is_same_v<F, double>)
bool is_derivation(const Mat<F>& d7) {
  if (d7.rows() != 7 || d7.cols() != 7) throw std::invalid_argument("expected a 7x7 matrix");
  auto apply = [&](const Octonion<F>& o) {
    Octonion<F> r;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) r.c[i + 1] += d7.at(i, j) * o.c[j + 1];
    return r;
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Octonion<F> u = Octonion<F>::unit(i), v = Octonion<F>::unit(j);
      Octonion<F> lhs = apply(oct_mul(u, v));
      Octonion<F> rhs = oct_mul(apply(u), v) + oct_mul(u, apply(v));
      for (int k = 0; k < 8; ++k)
        if (!is_zero(lhs.c[k] - rhs.c[k])) return false;
    }
  return true;
}

bool is_derivation(const Mat<double>& d7, double tol);

// inner0 returning the scalar type itself (real chains only)
template <class F>
F inner0_scalar(const Mat<F>& x, const Mat<F>& y) {
  F s(0);
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) s += x.at(i, k) * y.at(k, i);
  return -s;
}

/// Components of X in so(8) = p + m + g2.
template <class F>
struct So8Comps {
  Mat<F> p, m, h;
};

template <class F>
So8Comps<F> so8_decompose(const Mat<F>& x) {
  if (x.rows() != 8 || x.cols() != 8) throw std::invalid_argument("expected an 8x8 matrix");
  So8Comps<F> out{Mat<F>(8, 8), Mat<F>(8, 8), Mat<F>(8, 8)};
  for (int j = 1; j < 8; ++j) {
    out.p.at(0, j) = x.at(0, j);
    out.p.at(j, 0) = x.at(j, 0);
  }
  Mat<F> k = x - out.p;
  // the m basis is <,>_0-orthogonal with norm squared 6
  static const std::vector<Mat<F>> mb = so8_m_basis<F>();
  const F sixth = from_rat<F>(1, 6);
  for (const auto& b : mb) {
    F coef = inner0_scalar(k, b) * sixth;
    out.m += b * coef;
  }
  out.h = k - out.m;
  return out;
}

/// JSON array of the fourteen 7x7 integer generator matrices.
std::string g2_basis_json();

}  // namespace qpc
