#include <algorithm>

#include "doctest.h"
#include "qpc/actions/freeness.hpp"
#include "qpc/actions/spec.hpp"
#include "qpc/verify/search.hpp"

using namespace qpc;

TEST_CASE("eschenburg freeness on the worked examples") {
  CHECK(eschenburg_free({1, 2, 3}, {0, 0}));
  CHECK(!eschenburg_free({0, 2, 4}, {0, 0}));   // gcd(2,4) = 2
  CHECK(!eschenburg_free({1, 1, 1}, {1, 1}));   // gcd(0,0) treated as 0
  CHECK_THROWS_AS(eschenburg_free({1, 1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("eschenburg freeness is permutation- and translation-invariant") {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    std::vector<long> p(3);
    for (auto& v : p) v = long(rng.next_u64() % 9) - 4;
    std::array<long, 2> q{long(rng.next_u64() % 9) - 4, long(rng.next_u64() % 9) - 4};
    bool base = eschenburg_free(p, q);
    std::vector<long> pp = p;
    std::sort(pp.begin(), pp.end());
    do {
      CHECK(eschenburg_free(pp, q) == base);
    } while (std::next_permutation(pp.begin(), pp.end()));
    long c = long(rng.next_u64() % 7) - 3;
    std::vector<long> pt = p;
    for (auto& v : pt) v += c;
    CHECK(eschenburg_free(pt, {q[0] + c, q[1] + c}) == base);
  }
}

TEST_CASE("eschenburg freeness matches the root-of-unity oracle on small weights") {
  for (long p1 = -2; p1 <= 2; ++p1)
    for (long p2 = -2; p2 <= 2; ++p2)
      for (long p3 = -2; p3 <= 2; ++p3)
        for (long q1 = -2; q1 <= 2; ++q1)
          for (long q2 = -2; q2 <= 2; ++q2) {
            std::vector<long> p{p1, p2, p3};
            std::array<long, 2> q{q1, q2};
            CAPTURE(p1); CAPTURE(p2); CAPTURE(p3); CAPTURE(q1); CAPTURE(q2);
            CHECK(eschenburg_free(p, q) == eschenburg_free_roots_oracle(p, q));
          }
}

TEST_CASE("the weight hypothesis on the worked examples") {
  CHECK(qp_hypothesis({1, 2, 3}, {0, 0}));
  CHECK(!qp_hypothesis({0, 0, 0}, {-1, 1}));
  CHECK_THROWS_AS(qp_hypothesis({1, 1}, {0, 0}), std::invalid_argument);
  auto w = qp_hypothesis_witness({1, 1, 1, 4}, {0, 0});
  CHECK(w.holds);
  CHECK(w.j == 3);  // the unequal pair must involve the last weight
}

TEST_CASE("circle-times-g2 freeness: the published free set") {
  CHECK(s1_g2_free(0, 0, 1));
  CHECK(s1_g2_free(0, 1, 0));
  CHECK(s1_g2_free(0, 0, -1));
  CHECK(!s1_g2_free(1, 1, 1));
  CHECK(!s1_g2_free(0, 0, 2));
  CHECK(!s1_g2_free(1, 2, 3));
  CHECK_THROWS_AS(s1_g2_free(0, 0, 0), std::invalid_argument);
}

TEST_CASE("pattern solver agrees with the angle grid on |p| <= 2") {
  for (long p1 = -2; p1 <= 2; ++p1)
    for (long p2 = -2; p2 <= 2; ++p2)
      for (long p3 = -2; p3 <= 2; ++p3) {
        if (p1 == 0 && p2 == 0 && p3 == 0) continue;
        CAPTURE(p1); CAPTURE(p2); CAPTURE(p3);
        CHECK(s1_g2_free(p1, p2, p3) == s1_g2_free_grid(p1, p2, p3));
      }
}

TEST_CASE("parity criterion for simple connectedness") {
  CHECK(simply_connected_parity({0, 0, 0, 1}));
  CHECK(!simply_connected_parity({1, 1, 0, 0}));
  CHECK(simply_connected_parity({1, 1, 1, 2}));
  for (long l = 1; l <= 5; ++l) CHECK(simply_connected_parity({1, 1, 1, 2 * l}));
  CHECK_THROWS_AS(simply_connected_parity({0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("biquotient specs roundtrip through JSON") {
  BiquotientSpec s = BiquotientSpec::eschenburg_spec({1, 2, 3}, {0, -1});
  BiquotientSpec t = spec_from_json(to_json(s));
  CHECK(t.family == Family::eschenburg);
  CHECK(t.p == s.p);
  CHECK(t.q == s.q);
  CHECK(to_json(BiquotientSpec::m13()).find("s1xg2") != std::string::npos);
}
