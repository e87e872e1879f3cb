#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpc/actions/spec.hpp"
#include "qpc/linalg/mat.hpp"
#include "qpc/verify/branches.hpp"

namespace qpc {

enum class Verdict { no_flat_plane, flat_plane_found, inconclusive };
enum class VerifyMode { exact, numeric, both };

std::string verdict_name(Verdict v);
std::string mode_name(VerifyMode m);

/// Result of verifying one distinguished point: the exact case-analysis
/// transcript, the numeric search summary, and (when a flat plane was
/// found) the witness frame.
struct PointCertificate {
  std::string target;  // m13 | n11 | eschenburg
  BiquotientSpec spec;
  std::string theta;  // rational multiple of pi, when applicable
  Mat<double> point;  // the distinguished group element A
  VerifyMode mode = VerifyMode::both;
  Verdict verdict = Verdict::inconclusive;

  bool exact_ran = false;
  bool exact_proved = false;
  std::vector<BranchCheck> branches;

  bool numeric_ran = false;
  double residual_infimum = -1;
  int restarts = 0;
  uint64_t seed = 0;
  int horizontal_dim = -1;
  std::vector<double> descent_trace;

  struct Witness {
    Mat<double> w_a, w_b;                      // underlying solutions of the constraints
    Mat<double> left_a, right_a, left_b, right_b;  // tangent pairs
    double residual = 0;
    double verticality = 0;  // max pairing against vertical generators
  };
  std::optional<Witness> witness;

  std::string note;
};

std::string certificate_json(const PointCertificate& c);

}  // namespace qpc
