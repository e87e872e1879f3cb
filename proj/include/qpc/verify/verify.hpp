#pragma once

#include <stdexcept>

#include "qpc/verify/certificate.hpp"
#include "qpc/verify/search.hpp"

namespace qpc {

/// Violation of a stated hypothesis (freeness, weight condition, excluded
/// angle); distinct from a search that merely failed to decide.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Angle num*pi/den.
struct Angle {
  long num = 1;
  long den = 4;
};
Angle parse_angle(const std::string& text);  // "pi/4", "2pi/3", "0"
std::string angle_name(const Angle& a);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::both;
  SearchConfig search;
  /// numeric no-flat-plane verdicts require at least this many restarts
  int min_restarts_for_verdict = 1000;
};

/// Certify no horizontal zero-curvature plane at A = diag(R(theta), I6)
/// for the circle-times-G2 quotient of SO(8).  Exact mode replays the case
/// analysis (valid for every theta off the axes) and instantiates it at
/// theta when cos/sin live in a supported quadratic field.
PointCertificate verify_m13(const Angle& theta, const VerifyOptions& opt);

/// Same point, vertical space enlarged to SO(3) x G2.
PointCertificate verify_n11(const Angle& theta, const VerifyOptions& opt);

/// Generalized Eschenburg quotient of U(n+1), n = p.size()-1 >= 2, at the
/// sqrt(2) block point.  Requires freeness and the weight hypothesis; the
/// witnessing pair is permuted to the front (a diffeomorphism of the
/// quotient).
PointCertificate verify_eschenburg(std::vector<long> p, std::array<long, 2> q,
                                   const VerifyOptions& opt);

}  // namespace qpc
