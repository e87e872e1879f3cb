#pragma once

#include <cstdint>
#include <vector>

#include "qpc/actions/horizontal.hpp"

namespace qpc {

/// Deterministic generator: splitmix64 stream + Box-Muller normals.
/// Self-contained so byte-identical runs do not depend on the standard
/// library's distribution implementations.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next_u64() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() {  // in (0,1)
    return (double(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }
  double normal();

 private:
  bool has_cached_ = false;
  double cached_ = 0;
};

inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return r.next_u64();
}

struct SearchConfig {
  uint64_t seed = 2024;
  int restarts = 1000;
  int max_steps = 200;
  int jobs = 1;
  double stop_residual = 1e-15;
};

struct SearchResult {
  double residual = 0;
  int best_restart = -1;
  int restarts = 0;
  uint64_t seed = 0;
  std::vector<double> coeff_a, coeff_b;      // orthonormal frame coefficients
  std::vector<double> trace;                  // monotone residuals of the winning descent
};

/// Randomized minimization of the flat-plane residual over orthonormal
/// 2-frames in the horizontal space: independent seeded restarts, each a
/// finite-difference descent; results merge by (residual, restart index),
/// so the outcome is independent of the number of worker threads.
SearchResult min_residual_search(const HorizontalSpace& hs, const SearchConfig& cfg);

/// Residual of an explicit coefficient frame (orthonormalized internally;
/// returns +inf for a degenerate pair).
double frame_residual(const HorizontalSpace& hs, std::vector<double> a, std::vector<double> b);

}  // namespace qpc
