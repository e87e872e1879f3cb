#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qpc {

/// Freeness of the circle x U(n-1) action with weights p (length n+1 >= 3)
/// on the left and (q1, q2, U(n-1)) on the right: free iff
/// gcd(p_i - q1, p_j - q2) = 1 for every ordered pair i != j.
/// gcd(0,0) counts as 0, so coincident weights fail.
bool eschenburg_free(const std::vector<long>& p, const std::array<long, 2>& q);

/// Existence of a pair i < j with p_i != p_j and
/// p_i + p_j not in {2 q1, 2 q2, q1 + q2}; returns the witnessing pair.
struct HypothesisWitness {
  bool holds = false;
  int i = -1, j = -1;
};
HypothesisWitness qp_hypothesis_witness(const std::vector<long>& p, const std::array<long, 2>& q);
bool qp_hypothesis(const std::vector<long>& p, const std::array<long, 2>& q);

/// Freeness of the S^1 x G2 biquotient action on SO(8), where the circle
/// acts with block angles (0, p1 t, p2 t, p3 t).  Decided exactly: a group
/// element is conjugate to a maximal-torus element of G2 iff the angle
/// multisets {0, p1 t, p2 t, p3 t} and {0, a, b, a+b} agree up to the Weyl
/// group of SO(8) (block permutations and sign changes; the zero block
/// absorbs the even-sign-change parity).  Every assignment pattern yields
/// two congruences m1 t = m2 t = 0 (mod 2pi); the action is free iff each
/// pattern forces t = 0.
bool s1_g2_free(long p1, long p2, long p3);

/// Grid cross-check of s1_g2_free: conjugacy witnesses searched over
/// t, a, b in 2*pi*Z/grid.  Retained as an independent oracle.
bool s1_g2_free_grid(long p1, long p2, long p3, int grid = 720);

/// Parity criterion for simple connectedness of SO(8) // (S^1_q x G2):
/// the inclusion S^1_q -> SO(8) is surjective on pi_1 iff sum(q) is odd.
bool simply_connected_parity(const std::array<long, 4>& q);

/// Brute-force freeness oracle for n = 2 over 120th roots of unity
/// (eigenvalue-multiset comparison); used by the acceptance suite.
bool eschenburg_free_roots_oracle(const std::vector<long>& p, const std::array<long, 2>& q,
                                  int order = 120);

}  // namespace qpc
