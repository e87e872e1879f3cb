#include <algorithm>

#include "doctest.h"
#include "qpc/charcls/pontrjagin.hpp"
#include "qpc/verify/search.hpp"

using namespace qpc;

TEST_CASE("elementary symmetric values of squared weights") {
  CHECK(sigma_of_squares(1, {0, 0, 0, 1}) == 1);
  for (long l = 1; l <= 3; ++l)
    CHECK(sigma_of_squares(1, {1, 1, 1, 2 * l}) == 4 * l * l + 3);
  CHECK_THROWS_AS(elementary_symmetric(0, std::vector<Int>{1, 2}), std::out_of_range);
  CHECK_THROWS_AS(elementary_symmetric(3, std::vector<Int>{1, 2}), std::out_of_range);
}

TEST_CASE("zero-sum trick identities on the worked triples") {
  auto r1 = nicetrick_check(1, 1, -2);
  CHECK(r1.first);
  CHECK(r1.second);
  auto r0 = nicetrick_check(0, 0, 0);
  CHECK(r0.first);
  CHECK(r0.second);
  auto r2 = nicetrick_check(1, 2, -3);
  CHECK(r2.first);
  CHECK(r2.second);
  CHECK_THROWS_AS(nicetrick_check(1, 1, 1), std::invalid_argument);
}

TEST_CASE("zero-sum trick identities, exhaustive over |r| <= 50") {
  for (long a = -50; a <= 50; ++a)
    for (long b = -50; b <= 50; ++b) {
      long c = -a - b;
      if (c < -50 || c > 50) continue;
      auto r = nicetrick_check(a, b, c);
      CHECK(r.first);
      CHECK(r.second);
    }
}

TEST_CASE("circle pullback on the generators") {
  std::array<long, 4> q{0, 0, 0, 1};
  GradedPoly u = GradedPoly::var(VarSet::u1, 0);
  CHECK(pullback_circle(sigma_t_squared(1), q) == u * u);
  CHECK(pullback_circle(y4_poly(), q).is_zero());
  CHECK(pullback_circle(GradedPoly::constant(VarSet::t4, 1), q) ==
        GradedPoly::constant(VarSet::u1, 1));
}

TEST_CASE("g2 pullback on the generators") {
  CHECK(pullback_g2(sigma_t_squared(1)) == sigma_s_squared(1));
  CHECK(pullback_g2(y4_poly()).is_zero());
  CHECK(pullback_g2(sigma_t_squared(3)) == sigma_s_squared(3));
  // sigma_2(s^2) = sigma_2(s)^2 = (sigma_1(s^2)/2)^2, i.e. 4 sigma_2(s^2) = x1^2
  GradedPoly x1 = sigma_s_squared(1);
  GradedPoly lhs = sigma_s_squared(2);
  lhs *= Int(4);
  CHECK(lhs == x1 * x1);
  CHECK(pullback_g2(sigma_t_squared(2)) == sigma_s_squared(2));
}

TEST_CASE("pullbacks are ring homomorphisms preserving degree") {
  Rng rng(23);
  auto random_t_poly = [&](int deg) {
    GradedPoly p(VarSet::t4);
    for (int t = 0; t < 4; ++t) {
      GradedPoly mono = GradedPoly::constant(VarSet::t4, long(rng.next_u64() % 9) - 4);
      int total = 0;
      while (total < deg) {
        mono *= GradedPoly::var(VarSet::t4, int(rng.next_u64() % 4));
        ++total;
      }
      p += mono;
    }
    return p;
  };
  std::array<long, 4> q{2, -1, 3, 1};
  for (int t = 0; t < 100; ++t) {
    int d = 1 + int(rng.next_u64() % 3);
    GradedPoly a = random_t_poly(d), b = random_t_poly(d);
    CHECK(pullback_circle(a + b, q) == pullback_circle(a, q) + pullback_circle(b, q));
    CHECK(pullback_circle(a * b, q) == pullback_circle(a, q) * pullback_circle(b, q));
    CHECK(pullback_g2(a + b) == pullback_g2(a) + pullback_g2(b));
    CHECK(pullback_g2(a * b) == pullback_g2(a) * pullback_g2(b));
    if (!a.is_zero()) {
      CHECK(a.homogeneous());
      GradedPoly pa = pullback_g2(a);
      if (!pa.is_zero()) CHECK(pa.degree() == a.degree());
    }
  }
}

TEST_CASE("root systems have the right cardinalities and square sums") {
  CHECK(so8_roots().positive_roots.size() == 12);
  CHECK(g2_roots().positive_roots.size() == 6);
  CHECK(so3_roots().positive_roots.size() == 1);

  GradedPoly so8sum = sum_squared_positive_roots(so8_roots());
  GradedPoly want_t = sigma_t_squared(1);
  want_t *= Int(6);
  CHECK(so8sum == want_t);

  GradedPoly g2sum = sum_squared_positive_roots(g2_roots());
  GradedPoly want_s = sigma_s_squared(1);
  want_s *= Int(4);
  CHECK(g2sum == want_s);

  GradedPoly so3sum = sum_squared_positive_roots(so3_roots());
  GradedPoly u = GradedPoly::var(VarSet::u1, 0);
  CHECK(so3sum == u * u);
}

TEST_CASE("Weyl invariance of the generators") {
  // sigma_i(t^2) under permutations and even sign changes (4! * 8 elements)
  int perm[4] = {0, 1, 2, 3};
  std::sort(perm, perm + 4);
  do {
    for (int signs = 0; signs < 16; ++signs) {
      if (__builtin_popcount(unsigned(signs)) % 2 != 0) continue;  // even flips only
      std::vector<GradedPoly> images;
      for (int i = 0; i < 4; ++i) {
        GradedPoly im = GradedPoly::var(VarSet::t4, perm[i]);
        if ((signs >> i) & 1) im *= Int(-1);
        images.push_back(im);
      }
      for (int k = 1; k <= 3; ++k)
        CHECK(sigma_t_squared(k).substitute(VarSet::t4, images) == sigma_t_squared(k));
      CHECK(y4_poly().substitute(VarSet::t4, images) == y4_poly());
    }
  } while (std::next_permutation(perm, perm + 4));

  // sigma_1(s^2), sigma_3(s^2) under S3 permutations and global sign change
  int sperm[3] = {0, 1, 2};
  std::sort(sperm, sperm + 3);
  do {
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<GradedPoly> images;
      for (int i = 0; i < 2; ++i) {
        GradedPoly im = GradedPoly::var(VarSet::s2, sperm[i]);
        if (flip) im *= Int(-1);
        images.push_back(im);
      }
      CHECK(sigma_s_squared(1).substitute(VarSet::s2, images) == sigma_s_squared(1));
      CHECK(sigma_s_squared(3).substitute(VarSet::s2, images) == sigma_s_squared(3));
    }
  } while (std::next_permutation(sperm, sperm + 3));
}

TEST_CASE("canonical s-reduction is idempotent and multiplicative") {
  // s1 + s2 + s3 = 0 in the quotient
  GradedPoly s3 = GradedPoly::var(VarSet::s2, 2);
  GradedPoly sum = GradedPoly::var(VarSet::s2, 0) + GradedPoly::var(VarSet::s2, 1) + s3;
  CHECK(sum.is_zero());
  // products built in different orders agree
  GradedPoly a = GradedPoly::var(VarSet::s2, 0) * s3;
  GradedPoly b = s3 * GradedPoly::var(VarSet::s2, 0);
  CHECK(a == b);
}

TEST_CASE("first Pontrjagin coefficients") {
  CHECK(p1_coefficient("s1xg2", {0, 0, 0, 1}) == 2);
  CHECK(p1_coefficient("so3xg2", {0, 0, 0, 1}) == 1);
  for (long l = 1; l <= 3; ++l)
    CHECK(p1_coefficient("s1xg2", {1, 1, 1, 2 * l}) == 2 * (4 * l * l + 3));
  CHECK(p1_coefficient("s1xg2", {0, 0, 0, 1}, 5) == 2);
  CHECK_THROWS_AS(p1_coefficient("nope", {0, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("integral Pontrjagin magnitude via the fixture constraints") {
  IntegralP1 r = p1_integral_m13();
  CHECK(r.magnitude == 8);
  CHECK(r.k_values == std::set<long>{-2, -1, 1, 2});
  P1Fixtures bad;
  bad.xbar_multiplier_even = false;
  CHECK_THROWS_AS(p1_integral_m13(bad), std::runtime_error);
}

TEST_CASE("printer uses graded lexicographic order") {
  CHECK(sigma_t_squared(1).str() == "t1^2 + t2^2 + t3^2 + t4^2");
  GradedPoly p = GradedPoly::var(VarSet::t4, 0) * GradedPoly::var(VarSet::t4, 1);
  p += GradedPoly::constant(VarSet::t4, -3);
  CHECK(p.str() == "t1*t2 - 3");
  CHECK(GradedPoly(VarSet::u1).str() == "0");
  GradedPoly s1sq = sigma_s_squared(1);
  CHECK(s1sq.str() == "2*s1^2 + 2*s1*s2 + 2*s2^2");
}

TEST_CASE("mod-p reduction applies at output only") {
  GradedPoly p = GradedPoly::constant(VarSet::u1, 7);
  CHECK(p.reduced_mod(5) == GradedPoly::constant(VarSet::u1, 2));
  CHECK_THROWS_AS(p.reduced_mod(2), std::invalid_argument);
}
