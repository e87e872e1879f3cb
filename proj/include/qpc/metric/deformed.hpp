#pragma once

#include <stdexcept>

#include "qpc/cayley/so8.hpp"
#include "qpc/cayley/unitary.hpp"
#include "qpc/config.hpp"
#include "qpc/linalg/mat.hpp"

namespace qpc {

/// Which reductive chain a tangent vector belongs to.
enum class ChainKind { so8_so7_g2, unitary_chain };

struct ChainSpec {
  ChainKind kind = ChainKind::so8_so7_g2;
  int n = 0;  // unitary chain: u(n+1) > u(1)+u(n) > u(1)+u(1)+u(n-1)
  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

// Chain objects: decompose() into three orthogonal components,
// inner() = the bi-invariant pairing, and whether the second deformation
// step is available ((SO(7), G2) is not a symmetric pair, so the so(8)
// chain carries one-step metrics only).

template <class F>
struct So8Chain {
  using Scalar = F;
  using Real = F;
  static constexpr bool two_step_allowed = false;
  static constexpr int matrix_dim = 8;

  struct Comps {
    Mat<F> p, m, h;
  };
  Comps decompose(const Mat<F>& x) const {
    auto c = so8_decompose(x);
    return {c.p, c.m, c.h};
  }
  Real inner(const Mat<F>& x, const Mat<F>& y) const { return inner0_scalar(x, y); }
  ChainSpec spec() const { return {ChainKind::so8_so7_g2, 0}; }
};

template <class CF>
struct UnitaryChain {
  using Scalar = CF;
  using Real = real_scalar_t<CF>;
  static constexpr bool two_step_allowed = true;
  int n;

  explicit UnitaryChain(int nn) : n(nn) {
    if (n < 2) throw std::invalid_argument("unitary chain needs n >= 2");
  }
  struct Comps {
    Mat<CF> p, m, h;
  };
  Comps decompose(const Mat<CF>& x) const {
    auto c = unitary_decompose(x, n);
    return {c.p, c.m, c.h};
  }
  Real inner(const Mat<CF>& x, const Mat<CF>& y) const { return inner0(x, y); }
  ChainSpec spec() const { return {ChainKind::unitary_chain, n}; }
};

/// Realified double-precision view of the unitary chain (numeric search).
struct UnitaryChainReal {
  using Scalar = double;
  using Real = double;
  static constexpr bool two_step_allowed = true;
  int n;

  explicit UnitaryChainReal(int nn) : n(nn) {
    if (n < 2) throw std::invalid_argument("unitary chain needs n >= 2");
  }
  struct Comps {
    Mat<double> p, m, h;
  };
  Comps decompose(const Mat<double>& x) const {
    auto c = unitary_decompose_real(x, n);
    return {c.p, c.m, c.h};
  }
  Real inner(const Mat<double>& x, const Mat<double>& y) const { return 0.5 * inner0(x, y); }
  ChainSpec spec() const { return {ChainKind::unitary_chain, n}; }
};

/// One- or two-step deformation of the bi-invariant metric along the chain:
///   Phi1(Y) = Y_p + lam1 Y_k
///   Phi2(Y) = Y_p + lam1 Y_m + lam1 lam2 Y_h
///   Psi(Y)  = Y_p + Y_m + lam2 Y_h
template <class Ch>
class Metric {
 public:
  using F = typename Ch::Scalar;
  using Real = typename Ch::Real;

  static Metric one_step(const Ch& chain, Real lam1) { return Metric(chain, lam1, Real(0), false); }
  static Metric two_step(const Ch& chain, Real lam1, Real lam2) {
    if (!Ch::two_step_allowed)
      throw std::invalid_argument("two-step deformation requires a symmetric-pair second step");
    return Metric(chain, lam1, lam2, true);
  }

  bool two_step() const { return two_step_; }
  const Ch& chain() const { return chain_; }
  Real lambda1() const { return lam1_; }
  Real lambda2() const { return lam2_; }
  /// shrinking parameters of the submersion picture: lam = t/(t+1)
  Real t_param() const { return lam1_ * inv(Real(1) - lam1_); }
  Real s_param() const {
    require_two_step();
    return lam2_ * inv(Real(1) - lam2_);
  }

  Mat<F> phi(const Mat<F>& x) const {
    auto c = chain_.decompose(x);
    if (two_step_) {
      Real l12 = lam1_ * lam2_;
      return c.p + c.m * F(lam1_) + c.h * F(l12);
    }
    return c.p + (c.m + c.h) * F(lam1_);
  }
  Mat<F> phi_inv(const Mat<F>& x) const {
    auto c = chain_.decompose(x);
    Real i1 = inv(lam1_);
    if (two_step_) {
      Real i12 = i1 * inv(lam2_);
      return c.p + c.m * F(i1) + c.h * F(i12);
    }
    return c.p + (c.m + c.h) * F(i1);
  }
  Mat<F> psi(const Mat<F>& x) const {
    require_two_step();
    auto c = chain_.decompose(x);
    return c.p + c.m + c.h * F(lam2_);
  }
  Mat<F> psi_inv(const Mat<F>& x) const {
    require_two_step();
    auto c = chain_.decompose(x);
    Real i2 = inv(lam2_);
    return c.p + c.m + c.h * F(i2);
  }

  Real inner(const Mat<F>& x, const Mat<F>& y) const { return chain_.inner(x, phi(y)); }

  /// Sum of squared bracket norms deciding zero curvature of the plane
  /// span{Phi^{-1}X, Phi^{-1}Y}: three brackets for one-step metrics,
  /// five for two-step.  The pair is orthonormalized in this metric first;
  /// a linearly dependent pair is an error.
  Real flat_residual(const Mat<F>& x, const Mat<F>& yin) const {
    Real a2 = inner(x, x);
    if (degenerate(a2)) throw std::invalid_argument("degenerate pair: first leg has zero norm");
    Real coef = inner(x, yin) * inv(a2);
    Mat<F> y = yin - x * F(coef);
    Real b2 = inner(y, y);
    if (degenerate(b2, a2)) throw std::invalid_argument("degenerate pair: legs are linearly dependent");

    auto cx = chain_.decompose(x);
    auto cy = chain_.decompose(y);
    Mat<F> xk = cx.m + cx.h, yk = cy.m + cy.h;
    Real r = chain_.inner(bracket(x, y), bracket(x, y));
    r += chain_.inner(bracket(xk, yk), bracket(xk, yk));
    r += chain_.inner(bracket(cx.p, cy.p), bracket(cx.p, cy.p));
    if (two_step_) {
      r += chain_.inner(bracket(cx.m, cy.m), bracket(cx.m, cy.m));
      r += chain_.inner(bracket(cx.h, cy.h), bracket(cx.h, cy.h));
    }
    Real scale = inv(a2) * inv(b2);
    Real out = r * scale;
    return out;
  }

 private:
  Metric(const Ch& chain, Real l1, Real l2, bool two)
      : chain_(chain), lam1_(l1), lam2_(l2), two_step_(two) {
    if (!positive_unit_interval(lam1_) || (two_step_ && !positive_unit_interval(lam2_)))
      throw std::invalid_argument("deformation parameters must lie in (0,1)");
  }
  void require_two_step() const {
    if (!two_step_) throw std::logic_error("psi is defined for two-step metrics only");
  }
  static Real inv(const Real& v) { return Real(1) / v; }
  static bool positive_unit_interval(const Real& v) {
    if constexpr (std::is_same_v<Real, double>) return v > 0 && v < 1;
    else return !is_zero(v) && !is_zero(Real(1) - v) && to_double(v) > 0 && to_double(v) < 1;
  }
  bool degenerate(const Real& nsq) const {
    if constexpr (std::is_same_v<Real, double>) return nsq <= tol().frame_gram;
    else return is_zero(nsq);
  }
  bool degenerate(const Real& nsq, const Real& scale) const {
    if constexpr (std::is_same_v<Real, double>) return nsq <= tol().frame_gram * scale;
    else return is_zero(nsq);
  }

  Ch chain_;
  Real lam1_, lam2_;
  bool two_step_;
};

/// Tangent vector with cached chain components (library-facing value type).
template <class F>
struct LieVec {
  ChainSpec chain;
  Mat<F> mat, p, m, h;
};

template <class F>
LieVec<F> so8_vector(const Mat<F>& x) {
  auto c = so8_decompose(x);
  return LieVec<F>{{ChainKind::so8_so7_g2, 0}, x, c.p, c.m, c.h};
}

template <class CF>
LieVec<CF> unitary_vector(int n, const Mat<CF>& x) {
  auto c = unitary_decompose(x, n);
  return LieVec<CF>{{ChainKind::unitary_chain, n}, x, c.p, c.m, c.h};
}

}  // namespace qpc
