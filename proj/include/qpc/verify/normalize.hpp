#pragma once

#include <utility>

#include "qpc/cayley/so8.hpp"
#include "qpc/linalg/mat.hpp"

namespace qpc {

// Frame-normalization subroutines backing the "without loss of generality"
// steps of the case analyses.  They act on spanning pairs of a plane and
// never change the plane itself.

/// Shear the second leg orthogonal to the first in the given bilinear form
/// (callers pass a deformed-metric closure).
template <class InnerFn>
std::pair<Mat<double>, Mat<double>> orthogonalize_pair(const Mat<double>& x, const Mat<double>& y,
                                                       InnerFn&& inner) {
  double a2 = inner(x, x);
  if (a2 <= 0) return {x, y};
  Mat<double> y2 = y - x * (inner(x, y) / a2);
  return {x, y2};
}

/// Rotate/shear a flat horizontal frame of the SO(8) family so the first
/// leg lies in p and the second in m.  Valid on frames whose brackets
/// vanish (p-components dependent, m-components dependent); returns the
/// reshaped frame.
inline std::pair<Mat<double>, Mat<double>> rotate_flat_frame_to_p_m(const Mat<double>& wa,
                                                                    const Mat<double>& wb) {
  auto ca = so8_decompose(wa);
  auto cb = so8_decompose(wb);
  double na = inner0(ca.p, ca.p), nb = inner0(cb.p, cb.p);
  Mat<double> x = wa, y = wb;
  if (nb > na) std::swap(x, y);
  auto cx = so8_decompose(x);
  double np = inner0(cx.p, cx.p);
  if (np > 1e-14) {
    auto cy = so8_decompose(y);
    y -= x * (inner0(cx.p, cy.p) / np);  // kill the weaker p-component
  }
  auto cy = so8_decompose(y);
  double nm = inner0(cy.m, cy.m);
  if (nm > 1e-14) {
    cx = so8_decompose(x);
    x -= y * (inner0(cx.m, cy.m) / nm);  // kill the first leg's m-component
  }
  return {x, y};
}

}  // namespace qpc
