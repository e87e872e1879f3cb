#include "qpc/actions/horizontal.hpp"

#include <cmath>
#include <stdexcept>

#include "qpc/actions/freeness.hpp"
#include "qpc/cayley/so8.hpp"
#include "qpc/cayley/unitary.hpp"
#include "qpc/config.hpp"
#include "qpc/exact/quadratic.hpp"

namespace qpc {
namespace {

Mat<double> rotation_block(double theta) {
  Mat<double> a = Mat<double>::identity(8);
  double c = std::cos(theta), s = std::sin(theta);
  a.at(0, 0) = c; a.at(0, 1) = -s;
  a.at(1, 0) = s; a.at(1, 1) = c;
  return a;
}

// circle generator with block angles (0, p1, p2, p3)
Mat<double> circle_generator(const std::vector<long>& p) {
  Mat<double> t(8, 8);
  for (int b = 0; b < 3; ++b) {
    t.at(2 * b + 2, 2 * b + 3) = -double(p[b]);
    t.at(2 * b + 3, 2 * b + 2) = double(p[b]);
  }
  return t;
}

std::vector<Mat<double>> so3_generators() {
  std::vector<Mat<double>> out;
  for (auto [i, j] : {std::pair{5, 6}, {5, 7}, {6, 7}}) {
    Mat<double> t(8, 8);
    t.at(i, j) = -1;
    t.at(j, i) = 1;
    out.push_back(t);
  }
  return out;
}

Mat<double> p_mask(const Mat<double>& x) {
  Mat<double> out(8, 8);
  for (int j = 1; j < 8; ++j) {
    out.at(0, j) = x.at(0, j);
    out.at(j, 0) = x.at(j, 0);
  }
  return out;
}

}  // namespace

double HorizontalSpace::inner0_here(const Mat<double>& x, const Mat<double>& y) const {
  double s = inner0(x, y);
  return geo_ == Geo::unitary ? 0.5 * s : s;
}

Mat<double> HorizontalSpace::phi_left(const Mat<double>& x) const {
  if (geo_ == Geo::so8) {
    Mat<double> p = p_mask(x);
    return p + (x - p) * lam1_;
  }
  auto c = unitary_decompose_real(x, n_);
  return c.p + (c.m + c.h) * lam1_;
}

Mat<double> HorizontalSpace::phi_inv_left(const Mat<double>& x) const {
  if (geo_ == Geo::so8) {
    Mat<double> p = p_mask(x);
    return p + (x - p) * (1.0 / lam1_);
  }
  auto c = unitary_decompose_real(x, n_);
  return c.p + (c.m + c.h) * (1.0 / lam1_);
}

Mat<double> HorizontalSpace::phi_right(const Mat<double>& x) const {
  if (geo_ == Geo::so8) return phi_left(x);
  auto c = unitary_decompose_real(x, n_);
  return c.p + c.m * lam1_ + c.h * (lam1_ * lam2_);
}

Mat<double> HorizontalSpace::phi_inv_right(const Mat<double>& x) const {
  if (geo_ == Geo::so8) return phi_inv_left(x);
  auto c = unitary_decompose_real(x, n_);
  return c.p + c.m * (1.0 / lam1_) + c.h * (1.0 / (lam1_ * lam2_));
}

Mat<double> HorizontalSpace::ad_inv_point(const Mat<double>& w) const { return Ainv_ * w * A_; }

Mat<double> HorizontalSpace::w_of_coeffs(const double* c) const {
  Mat<double> w(nmat_, nmat_);
  const size_t len = size_t(nmat_) * nmat_;
  for (int i = 0; i < dim(); ++i) kern::ops().axpy(c[i], wb_[i].data(), w.data(), int(len));
  return w;
}

std::pair<Mat<double>, Mat<double>> HorizontalSpace::pair_of(const Mat<double>& w) const {
  return {-phi_inv_left(ad_inv_point(w)), phi_inv_right(w)};
}

double HorizontalSpace::one_step_residual(const Mat<double>& x, const Mat<double>& y) const {
  const int len = nmat_ * nmat_;
  const auto& k = kern::ops();
  Mat<double> b = bracket(x, y);
  double r = k.frob2(b.data(), len);
  Mat<double> xp, yp;
  if (geo_ == Geo::so8) {
    xp = p_mask(x);
    yp = p_mask(y);
  } else {
    xp = unitary_decompose_real(x, n_).p;
    yp = unitary_decompose_real(y, n_).p;
  }
  b = bracket(xp, yp);
  r += k.frob2(b.data(), len);
  b = bracket(x - xp, y - yp);
  r += k.frob2(b.data(), len);
  return geo_ == Geo::unitary ? 0.5 * r : r;
}

double HorizontalSpace::two_step_residual(const Mat<double>& x, const Mat<double>& y) const {
  const int len = nmat_ * nmat_;
  const auto& k = kern::ops();
  auto cx = unitary_decompose_real(x, n_);
  auto cy = unitary_decompose_real(y, n_);
  Mat<double> b = bracket(x, y);
  double r = k.frob2(b.data(), len);
  b = bracket(cx.m + cx.h, cy.m + cy.h);
  r += k.frob2(b.data(), len);
  b = bracket(cx.p, cy.p);
  r += k.frob2(b.data(), len);
  b = bracket(cx.m, cy.m);
  r += k.frob2(b.data(), len);
  b = bracket(cx.h, cy.h);
  r += k.frob2(b.data(), len);
  return 0.5 * r;
}

double HorizontalSpace::residual(const Mat<double>& wa, const Mat<double>& wb) const {
  // Both projected planes must be flat.  The bracket conditions are
  // evaluated on the W's themselves: for the one-step factors this is the
  // exact criterion; for the two-step factor the criterion applies to
  // Phi_1^{-1} W, which scales each component bracket by a positive power
  // of 1/lambda_1 and in particular has the same zero set.
  Mat<double> la = ad_inv_point(wa), lb = ad_inv_point(wb);
  double r = one_step_residual(la, lb);
  r += geo_ == Geo::so8 ? one_step_residual(wa, wb) : two_step_residual(wa, wb);
  return r;
}

double HorizontalSpace::product_inner(const Mat<double>& w1, const Mat<double>& w2) const {
  Mat<double> a1 = ad_inv_point(w1), a2 = ad_inv_point(w2);
  return inner0_here(a1, phi_inv_left(a2)) + inner0_here(w1, phi_inv_right(w2));
}

double HorizontalSpace::pair_inner(const std::pair<Mat<double>, Mat<double>>& x,
                                   const std::pair<Mat<double>, Mat<double>>& y) const {
  return inner0_here(x.first, phi_left(y.first)) + inner0_here(x.second, phi_right(y.second));
}

void HorizontalSpace::build(const std::vector<Mat<double>>& candidate_basis,
                            const std::vector<Mat<double>>& constraint_mats) {
  Mat<double> rows(int(constraint_mats.size()), int(candidate_basis.size()));
  for (size_t r = 0; r < constraint_mats.size(); ++r)
    for (size_t c = 0; c < candidate_basis.size(); ++c)
      rows.at(int(r), int(c)) = inner0_here(candidate_basis[c], constraint_mats[r]);
  auto null_coeffs = nullspace(rows);
  std::vector<Mat<double>> ws;
  for (const auto& nc : null_coeffs) {
    Mat<double> w(nmat_, nmat_);
    for (size_t c = 0; c < candidate_basis.size(); ++c) w += candidate_basis[c] * nc[c];
    ws.push_back(std::move(w));
  }
  // Gram-Schmidt in the product metric
  wb_.clear();
  for (auto& w : ws) {
    for (const auto& o : wb_) w -= o * product_inner(o, w);
    double nrm = std::sqrt(product_inner(w, w));
    if (nrm > 1e-9) wb_.push_back(w * (1.0 / nrm));
  }
}

HorizontalSpace HorizontalSpace::so8_family(const BiquotientSpec& spec, double theta, double lam1) {
  return so8_family_at(spec, rotation_block(theta), lam1);
}

HorizontalSpace HorizontalSpace::so8_family_at(const BiquotientSpec& spec, const Mat<double>& a,
                                               double lam1) {
  if (spec.family == Family::eschenburg)
    throw std::invalid_argument("use eschenburg_family for the unitary chain");
  if (a.rows() != 8 || a.cols() != 8) throw std::invalid_argument("point must be 8x8");
  HorizontalSpace hs;
  hs.geo_ = Geo::so8;
  hs.nmat_ = 8;
  hs.lam1_ = lam1;
  hs.A_ = a;
  hs.Ainv_ = hs.A_.transposed();
  {
    Mat<double> should_be_id = hs.A_.transposed() * hs.A_ - Mat<double>::identity(8);
    double res = std::sqrt(kern::ops().frob2(should_be_id.data(), 64));
    if (res > tol().derived) throw std::invalid_argument("point is not in SO(8)");
  }

  std::vector<Mat<double>> candidates = so8_p_basis<double>();
  for (auto& m : so8_m_basis<double>()) candidates.push_back(m);

  std::vector<Mat<double>> left_gens;
  if (spec.family == Family::s1_g2) {
    if (spec.p.size() != 3) throw std::invalid_argument("s1xg2 needs three circle weights");
    left_gens.push_back(circle_generator(spec.p));
    hs.expected_dim_ = 28 - 15;
  } else {
    left_gens = so3_generators();
    hs.expected_dim_ = 28 - 17;
  }
  for (const auto& t : left_gens) hs.ugens_.push_back({t, Mat<double>(8, 8)});
  for (const auto& z : g2_basis8<double>()) hs.ugens_.push_back({Mat<double>(8, 8), z});

  std::vector<Mat<double>> constraints;
  for (const auto& t : left_gens) constraints.push_back(hs.A_ * t * hs.Ainv_);
  hs.gbasis_ = candidates;
  for (auto& z : g2_basis8<double>()) hs.gbasis_.push_back(z);
  hs.build(candidates, constraints);
  return hs;
}

HorizontalSpace HorizontalSpace::eschenburg_family(const BiquotientSpec& spec, double lam1,
                                                   double lam2) {
  if (spec.family != Family::eschenburg) throw std::invalid_argument("expected eschenburg family");
  const int n = spec.n();
  if (n < 2) throw std::invalid_argument("eschenburg chain needs n >= 2");
  const int N = n + 1;
  HorizontalSpace hs;
  hs.geo_ = Geo::unitary;
  hs.n_ = n;
  hs.nmat_ = 2 * N;
  hs.lam1_ = lam1;
  hs.lam2_ = lam2;
  hs.expected_dim_ = 4 * n - 1;

  // the sqrt(2) block point
  Mat<Cx<Quad2>> a(N, N);
  Cx<Quad2> r(inv_sqrt2());
  a.at(0, 0) = r; a.at(0, 1) = -r;
  a.at(1, 0) = r; a.at(1, 1) = r;
  for (int i = 2; i < N; ++i) a.at(i, i) = Cx<Quad2>(1);
  hs.A_ = realify(a);
  hs.Ainv_ = hs.A_.transposed();

  // full u(n+1) basis, realified
  std::vector<Mat<double>> all;
  for (const auto& b : unitary_basis<Cx<Rat>>(N)) all.push_back(realify(b));

  // a basis element lies in u(n-1) iff it vanishes outside the lower
  // (n-1)x(n-1) complex block; those directions are removed by the
  // W_{u(n-1)} = 0 constraint
  auto in_unm1 = [N](const Mat<double>& b) {
    Mat<double> outside = b;
    for (int i = 4; i < 2 * N; ++i)
      for (int j = 4; j < 2 * N; ++j) outside.at(i, j) = 0;
    return outside.all_zero();
  };
  std::vector<Mat<double>> candidates;
  for (const auto& b : all)
    if (!in_unm1(b)) candidates.push_back(b);

  // weights
  Mat<Cx<Rat>> pmatc(N, N), qmatc(N, N);
  for (int i = 0; i < N; ++i) pmatc.at(i, i) = Cx<Rat>(Rat(0), Rat(spec.p[i]));
  qmatc.at(0, 0) = Cx<Rat>(Rat(0), Rat(spec.q[0]));
  qmatc.at(1, 1) = Cx<Rat>(Rat(0), Rat(spec.q[1]));
  Mat<double> pmat = realify(pmatc), qmat = realify(qmatc);
  hs.ugens_.push_back({pmat, qmat});
  for (const auto& b : all)
    if (in_unm1(b)) hs.ugens_.push_back({Mat<double>(2 * N, 2 * N), b});

  std::vector<Mat<double>> constraints{hs.A_ * pmat * hs.Ainv_ - qmat};
  hs.gbasis_ = all;
  hs.build(candidates, constraints);
  return hs;
}

std::vector<std::pair<Mat<double>, Mat<double>>> HorizontalSpace::vertical_generators() const {
  std::vector<std::pair<Mat<double>, Mat<double>>> out;
  for (const auto& x : gbasis_) out.push_back({ad_inv_point(x), x});
  for (const auto& [y1, y2] : ugens_) out.push_back({-y1, -y2});
  return out;
}

}  // namespace qpc
