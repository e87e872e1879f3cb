#pragma once

namespace qpc {

/// Tolerance and budget knobs shared across the library.  One record so a
/// caller can tighten or relax everything in one place.
struct Tolerances {
  double identity = 1e-12;       ///< structural identities (skewness, roundtrips)
  double derived = 1e-9;         ///< quantities obtained through floating computation
  double horizontality = 1e-10;  ///< pairing of horizontal vectors with vertical generators
  double witness = 1e-10;        ///< residual below which a frame counts as a flat-plane witness
  double positivity = 1e-6;      ///< residual infimum above which numeric search reports no flat plane
  double frame_gram = 1e-8;      ///< frames with smaller Gram determinant are resampled
};

inline const Tolerances& tol() {
  static const Tolerances t{};
  return t;
}

}  // namespace qpc
