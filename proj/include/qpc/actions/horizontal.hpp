#pragma once

#include <utility>
#include <vector>

#include "qpc/actions/spec.hpp"
#include "qpc/linalg/mat.hpp"

namespace qpc {

/// Numeric model of the horizontal space of the doubled action at (A, I).
/// Horizontal vectors are parametrized by W in g solving the linear
/// constraints; the tangent pair is
///     ( -Phi_1^{-1}(Ad_{A^{-1}} W), Phi_right^{-1}(W) ),
/// and the exposed W-basis is orthonormal for the induced product metric,
/// so frame coefficients live in a Euclidean space.
class HorizontalSpace {
 public:
  /// S^1 x G2 or SO(3) x G2 on SO(8), product of two one-step metrics.
  static HorizontalSpace so8_family(const BiquotientSpec& spec, double theta, double lam1);
  /// Same action at an arbitrary point; throws when A is not orthogonal.
  static HorizontalSpace so8_family_at(const BiquotientSpec& spec, const Mat<double>& a,
                                       double lam1);
  /// Eschenburg circle on U(n+1) at the sqrt(2) block point; one-step
  /// metric on the left factor, two-step on the right.  Matrices are
  /// realified (complex entries as 2x2 blocks).
  static HorizontalSpace eschenburg_family(const BiquotientSpec& spec, double lam1, double lam2);

  int dim() const { return int(wb_.size()); }
  int expected_dim() const { return expected_dim_; }
  int matrix_dim() const { return nmat_; }
  const Mat<double>& point() const { return A_; }
  const std::vector<Mat<double>>& wbasis() const { return wb_; }

  Mat<double> w_of_coeffs(const double* c) const;
  Mat<double> ad_inv_point(const Mat<double>& w) const;  // Ad_{A^{-1}} W
  std::pair<Mat<double>, Mat<double>> pair_of(const Mat<double>& w) const;

  /// Sum of the squared bracket norms from both projected planes; zero iff
  /// the horizontal plane spanned by the two (product-orthonormal) vectors
  /// has zero curvature.
  double residual(const Mat<double>& wa, const Mat<double>& wb) const;

  /// Product-metric pairing of two horizontal vectors given by W's.
  double product_inner(const Mat<double>& w1, const Mat<double>& w2) const;

  /// Pairing of an arbitrary tangent pair with an arbitrary pair, in the
  /// product of the two deformed metrics (used for verticality checks).
  double pair_inner(const std::pair<Mat<double>, Mat<double>>& x,
                    const std::pair<Mat<double>, Mat<double>>& y) const;

  /// Generators of the vertical space at (A, I), left-translated to the
  /// identity: (Ad_{A^{-1}} X, X) for X in g and (-Y1, -Y2) for (Y1, Y2)
  /// spanning the Lie algebra of U.
  std::vector<std::pair<Mat<double>, Mat<double>>> vertical_generators() const;

 private:
  enum class Geo { so8, unitary };
  Geo geo_ = Geo::so8;
  int nmat_ = 8;
  int n_ = 0;  // unitary chain parameter
  int expected_dim_ = 0;
  double lam1_ = 0.5, lam2_ = 0.5;
  Mat<double> A_, Ainv_;
  std::vector<Mat<double>> wb_;
  std::vector<std::pair<Mat<double>, Mat<double>>> ugens_;  // (Y1, Y2) basis of u
  std::vector<Mat<double>> gbasis_;

  double inner0_here(const Mat<double>& x, const Mat<double>& y) const;
  Mat<double> phi_inv_left(const Mat<double>& x) const;
  Mat<double> phi_right(const Mat<double>& x) const;
  Mat<double> phi_inv_right(const Mat<double>& x) const;
  Mat<double> phi_left(const Mat<double>& x) const;
  double one_step_residual(const Mat<double>& x, const Mat<double>& y) const;
  double two_step_residual(const Mat<double>& x, const Mat<double>& y) const;
  void build(const std::vector<Mat<double>>& candidate_basis,
             const std::vector<Mat<double>>& constraint_mats);
};

}  // namespace qpc
