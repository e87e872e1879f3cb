#include "qpc/charcls/pontrjagin.hpp"

#include <stdexcept>

namespace qpc {

RootSystem so8_roots() {
  RootSystem rs{"so8", VarSet::t4, {}, 4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> plus(4, 0), minus(4, 0);
      plus[i] = 1;
      plus[j] = 1;
      minus[i] = 1;
      minus[j] = -1;
      rs.positive_roots.push_back(minus);
      rs.positive_roots.push_back(plus);
    }
  return rs;
}

RootSystem g2_roots() {
  // on (s1, s2, s3) with sum zero: s1, s2, -s3, s1-s3, s2-s1, s2-s3
  RootSystem rs{"g2", VarSet::s2, {}, 3};
  rs.positive_roots = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, -1}, {1, 0, -1}, {-1, 1, 0}, {0, 1, -1}};
  return rs;
}

RootSystem so3_roots() { return {"so3", VarSet::u1, {{1}}, 1}; }

namespace {

GradedPoly ambient_var(const RootSystem& rs, int i) {
  // for the s-system index 2 materializes as -s1-s2
  return GradedPoly::var(rs.vars, i);
}

}  // namespace

GradedPoly sum_squared_positive_roots(const RootSystem& rs) {
  GradedPoly total(rs.vars);
  for (const auto& root : rs.positive_roots) {
    GradedPoly lin(rs.vars);
    for (int i = 0; i < rs.ambient; ++i) {
      if (root[i] == 0) continue;
      GradedPoly v = ambient_var(rs, i);
      v *= Int(root[i]);
      lin += v;
    }
    total += lin * lin;
  }
  return total;
}

GradedPoly sigma_t_squared(int i) {
  std::vector<GradedPoly> sq;
  for (int k = 0; k < 4; ++k) {
    GradedPoly t = GradedPoly::var(VarSet::t4, k);
    sq.push_back(t * t);
  }
  return elementary_symmetric(i, sq);
}

GradedPoly sigma_s_squared(int i) {
  std::vector<GradedPoly> sq;
  for (int k = 0; k < 3; ++k) {
    GradedPoly s = GradedPoly::var(VarSet::s2, k);
    sq.push_back(s * s);
  }
  return elementary_symmetric(i, sq);
}

GradedPoly y4_poly() {
  GradedPoly p = GradedPoly::constant(VarSet::t4, 1);
  for (int k = 0; k < 4; ++k) p *= GradedPoly::var(VarSet::t4, k);
  return p;
}

GradedPoly pullback_circle(const GradedPoly& in_t, const std::array<long, 4>& q) {
  if (in_t.vars() != VarSet::t4) throw std::invalid_argument("expected a t-polynomial");
  std::vector<GradedPoly> images;
  for (int i = 0; i < 4; ++i) {
    GradedPoly u = GradedPoly::var(VarSet::u1, 0);
    u *= Int(q[i]);
    images.push_back(u);
  }
  return in_t.substitute(VarSet::u1, images);
}

GradedPoly pullback_g2(const GradedPoly& in_t) {
  if (in_t.vars() != VarSet::t4) throw std::invalid_argument("expected a t-polynomial");
  std::vector<GradedPoly> images{
      GradedPoly(VarSet::s2),                // t1 -> 0
      GradedPoly::var(VarSet::s2, 0),        // t2 -> s1
      GradedPoly::var(VarSet::s2, 1),        // t3 -> s2
      -GradedPoly::var(VarSet::s2, 2),       // t4 -> -s3 = s1 + s2
  };
  return in_t.substitute(VarSet::s2, images);
}

std::pair<bool, bool> nicetrick_check(long r1, long r2, long r3) {
  if (r1 + r2 + r3 != 0) throw std::invalid_argument("triple must sum to zero");
  std::vector<Int> r{Int(r1), Int(r2), Int(r3)};
  std::vector<Int> r2v{Int(r1) * r1, Int(r2) * r2, Int(r3) * r3};
  Int s2 = elementary_symmetric(2, r);
  bool first = elementary_symmetric(1, r2v) == -2 * s2;
  bool second = elementary_symmetric(2, r2v) == s2 * s2;
  return {first, second};
}

Int p1_coefficient(const std::string& family, const std::array<long, 4>& q, long mod_prime) {
  // the SO(8) root sum is 6 sigma1(t^2); its circle pullback contributes
  // 6 sigma1(q^2) u^2, the G2 bundle removes 4 sigma1(q^2) u^2
  GradedPoly g_side = pullback_circle(sum_squared_positive_roots(so8_roots()), q);
  GradedPoly::Expo u2{2, 0, 0, 0};
  Int six_sigma = g_side.coefficient(u2);

  GradedPoly k_side = sum_squared_positive_roots(g2_roots());
  // k_side = c * sigma1(s^2); extract c exactly
  GradedPoly s1sq = sigma_s_squared(1);
  Int c(0);
  for (const auto& [e, coef] : s1sq.terms()) {
    Int num = k_side.coefficient(e);
    if (num % coef != 0) throw std::logic_error("root sum is not a multiple of sigma1(s^2)");
    Int ratio = num / coef;
    if (c == 0) c = ratio;
    else if (c != ratio) throw std::logic_error("root sum is not a multiple of sigma1(s^2)");
  }
  GradedPoly scaled = s1sq;
  scaled *= c;
  if (!(k_side == scaled)) throw std::logic_error("root sum is not a multiple of sigma1(s^2)");

  Int sigma1_q2 = sigma_of_squares(1, {q[0], q[1], q[2], q[3]});
  Int result = six_sigma - c * sigma1_q2;
  if (family == "s1xg2") {
    // nothing further: the circle has no roots
  } else if (family == "so3xg2") {
    GradedPoly h_side = sum_squared_positive_roots(so3_roots());
    result -= h_side.coefficient(u2);
  } else {
    throw std::invalid_argument("family must be s1xg2 or so3xg2");
  }
  if (mod_prime != 0) {
    if (mod_prime < 3) throw std::invalid_argument("modulus must be an odd prime");
    result %= mod_prime;
    if (result < 0) result += mod_prime;
  }
  return result;
}

IntegralP1 p1_integral_m13(const P1Fixtures& fx) {
  // p1 = 6 * (sign * zbar_magnitude) - 8 * multiplier, in units of y^2;
  // (root sums: 6 zbar from SO(8), 4 sigma1(s^2) = 8 xbar from G2).
  // The mod-p computation says p1 is divisible by no odd prime, so |p1|
  // must be a nonzero power of two.  |6*4 - 8m| = 8|3 -+ m| forces the odd
  // factor to be 1; for |k| > 2 the factor |3 -+ 2k| is at least 3, so a
  // finite enumeration is exhaustive.
  std::set<Int> magnitudes;
  std::set<long> ks;
  auto is_pow2 = [](Int v) {
    if (v <= 0) return false;
    while (v % 2 == 0) v /= 2;
    return v == 1;
  };
  for (int sign : {1, -1}) {
    for (long k = -fx.k_search_bound; k <= fx.k_search_bound; ++k) {
      Int mult = fx.xbar_multiplier_even ? Int(2 * k) : Int(2 * k + 1);
      Int p1 = Int(6) * sign * fx.zbar_pullback_magnitude - Int(8) * mult;
      Int mag = p1 < 0 ? Int(-p1) : p1;
      if (!is_pow2(mag)) continue;
      magnitudes.insert(mag);
      ks.insert(k);
    }
  }
  if (magnitudes.empty())
    throw std::runtime_error("fixture constraints admit no power-of-two Pontrjagin class");
  if (magnitudes.size() > 1)
    throw std::runtime_error("fixture constraints do not pin the Pontrjagin class");
  return {*magnitudes.begin(), ks};
}

}  // namespace qpc
