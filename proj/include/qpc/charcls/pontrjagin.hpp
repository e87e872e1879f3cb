#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qpc/charcls/poly.hpp"

namespace qpc {

/// Positive roots of a compact group as integer combinations of torus
/// coordinates, together with the variable set the torus lives in.
struct RootSystem {
  std::string name;
  VarSet vars;
  std::vector<std::vector<int>> positive_roots;  // coefficients on ambient coords
  int ambient = 0;                                // 4 (t), 3 (s, before reduction), 1 (u)
};

RootSystem so8_roots();   // t_i +- t_j, 12 roots
RootSystem g2_roots();    // s1, s2, -s3, s1-s3, s2-s1, s2-s3 (sum s = 0), 6 roots
RootSystem so3_roots();   // u, 1 root

/// Sum of the squared positive roots as a canonical polynomial:
/// SO(8) -> 6 sigma_1(t^2), G2 -> 4 sigma_1(s^2), SO(3) -> u^2.
GradedPoly sum_squared_positive_roots(const RootSystem& rs);

/// sigma_i(t^2) in the t-variables.
GradedPoly sigma_t_squared(int i);
/// sigma_i(s^2) reduced modulo s1+s2+s3 = 0.
GradedPoly sigma_s_squared(int i);
/// y4 = t1 t2 t3 t4.
GradedPoly y4_poly();

/// classifying-map pullback along the circle with weights q:
/// t_i -> q_i u (a ring homomorphism into Z[u]).
GradedPoly pullback_circle(const GradedPoly& in_t, const std::array<long, 4>& q);
/// pullback along the G2 inclusion: t1 -> 0, t2 -> s1, t3 -> s2, t4 -> -s3.
GradedPoly pullback_g2(const GradedPoly& in_t);

/// Both identities of the zero-sum trick: for r1+r2+r3 = 0,
/// sigma_1(r^2) = -2 sigma_2(r) and sigma_2(r^2) = sigma_2(r)^2.
std::pair<bool, bool> nicetrick_check(long r1, long r2, long r3);

/// First Pontrjagin class coefficient (of phi*(u^2)) from the root sums:
/// s1xg2: 6 sigma1(q^2) - 4 sigma1(q^2); so3xg2 subtracts the SO(3) root.
/// Optionally reduced mod an odd prime.
Int p1_coefficient(const std::string& family, const std::array<long, 4>& q, long mod_prime = 0);

/// Integral first Pontrjagin magnitude of the circle quotient with weights
/// (0,0,0,1): candidates 8(+-3 - 2k) intersected with the mod-p constraint
/// that |p1| is a power of two.  Returns the unique magnitude and the
/// admissible k values; throws when the fixture system has no unique answer.
struct IntegralP1 {
  Int magnitude;
  std::set<long> k_values;
};
struct P1Fixtures {
  // |phi_G^*(zbar)| in units of y^2 (sign undetermined)
  long zbar_pullback_magnitude = 4;
  // phi_U^*(xbar) = multiplier * y^2 with multiplier = 2k, k unknown; the
  // `odd` variant models a corrupted fixture and must fail
  bool xbar_multiplier_even = true;
  long k_search_bound = 64;
};
IntegralP1 p1_integral_m13(const P1Fixtures& fx = {});

}  // namespace qpc
