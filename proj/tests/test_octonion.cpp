#include <array>
#include <cmath>

#include "doctest.h"
#include "qpc/cayley/octonion.hpp"
#include "qpc/verify/search.hpp"

using namespace qpc;

namespace {

// Independent transcription of the published multiplication table
// (row * column over e1..e7), entries as signed basis indices into
// {1, i, j, k, l, il, jl, kl}; used as the oracle against the
// quaternion-pair product.
constexpr int kTable[7][7] = {
    // e1       e2       e3       e4       e5       e6       e7
    {-(0 + 1), +(3 + 1), -(2 + 1), +(5 + 1), -(4 + 1), -(7 + 1), +(6 + 1)},  // e1
    {-(3 + 1), -(0 + 1), +(1 + 1), +(6 + 1), +(7 + 1), -(4 + 1), -(5 + 1)},  // e2
    {+(2 + 1), -(1 + 1), -(0 + 1), +(7 + 1), -(6 + 1), +(5 + 1), -(4 + 1)},  // e3
    {-(5 + 1), -(6 + 1), -(7 + 1), -(0 + 1), +(1 + 1), +(2 + 1), +(3 + 1)},  // e4
    {+(4 + 1), -(7 + 1), +(6 + 1), -(1 + 1), -(0 + 1), -(3 + 1), +(2 + 1)},  // e5
    {+(7 + 1), +(4 + 1), -(5 + 1), -(2 + 1), +(3 + 1), -(0 + 1), -(1 + 1)},  // e6
    {-(6 + 1), +(5 + 1), +(4 + 1), -(3 + 1), -(2 + 1), +(1 + 1), -(0 + 1)},  // e7
};

}  // namespace

TEST_CASE("basis products reproduce the multiplication table exactly") {
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      int want = kTable[i - 1][j - 1];
      int idx = std::abs(want) - 1;
      Rat sign(want > 0 ? 1 : -1);
      Octonion<Rat> prod = oct_mul(Octonion<Rat>::unit(i), Octonion<Rat>::unit(j));
      for (int k = 0; k < 8; ++k) {
        CAPTURE(i); CAPTURE(j); CAPTURE(k);
        CHECK(prod.c[k] == (k == idx ? sign : Rat(0)));
      }
      BasisProduct bp = oct_basis_product(i, j);
      CHECK(bp.index == idx);
      CHECK(bp.sign == (want > 0 ? 1 : -1));
    }
  }
}

TEST_CASE("e0 is a two-sided identity") {
  Rng rng(7);
  for (int t = 0; t < 32; ++t) {
    Octonion<double> x;
    for (auto& c : x.c) c = rng.normal();
    Octonion<double> l = oct_mul(Octonion<double>::unit(0), x);
    Octonion<double> r = oct_mul(x, Octonion<double>::unit(0));
    for (int k = 0; k < 8; ++k) {
      CHECK(l.c[k] == x.c[k]);
      CHECK(r.c[k] == x.c[k]);
    }
  }
}

TEST_CASE("named products: e1*e2 = e3 and e2*e7 = -e5") {
  auto p12 = oct_mul(Octonion<Rat>::unit(1), Octonion<Rat>::unit(2));
  CHECK(p12.c[3] == Rat(1));
  auto p27 = oct_mul(Octonion<Rat>::unit(2), Octonion<Rat>::unit(7));
  CHECK(p27.c[5] == Rat(-1));
}

TEST_CASE("non-associativity witness: (e1 e2) e4 = e7 but e1 (e2 e4) = -e7") {
  auto lhs = oct_mul(oct_mul(Octonion<Rat>::unit(1), Octonion<Rat>::unit(2)), Octonion<Rat>::unit(4));
  auto rhs = oct_mul(Octonion<Rat>::unit(1), oct_mul(Octonion<Rat>::unit(2), Octonion<Rat>::unit(4)));
  CHECK(lhs.c[7] == Rat(1));
  CHECK(rhs.c[7] == Rat(-1));
  CHECK(lhs.c[7] + rhs.c[7] == Rat(0));
}

TEST_CASE("norm multiplicativity over seeded random pairs") {
  Rng rng(2024);
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    Octonion<double> x, y;
    for (auto& c : x.c) c = rng.normal();
    for (auto& c : y.c) c = rng.normal();
    double lhs = norm(oct_mul(x, y));
    double rhs = norm(x) * norm(y);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("norm multiplicativity is exact over the rationals") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    Octonion<Rat> x, y;
    for (auto& c : x.c) c = rat(long(rng.next_u64() % 19) - 9, 1 + long(rng.next_u64() % 7));
    for (auto& c : y.c) c = rat(long(rng.next_u64() % 19) - 9, 1 + long(rng.next_u64() % 7));
    CHECK(norm_sq(oct_mul(x, y)) == norm_sq(x) * norm_sq(y));
  }
}
