#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "qpc/kernels/kernels.hpp"
#include "qpc/verify/search.hpp"

using namespace qpc;

namespace {

std::vector<double> random_buf(Rng& rng, int len) {
  std::vector<double> v(len);
  for (auto& x : v) x = rng.normal();
  return v;
}

}  // namespace

TEST_CASE("all compiled backends agree with the scalar reference") {
  const auto& ref = kern::scalar_ops();
  Rng rng(99);
  for (const kern::Ops* o : kern::available_backends()) {
    CAPTURE(o->name);
    for (int n : {2, 4, 6, 8, 9, 14}) {
      auto a = random_buf(rng, n * n), b = random_buf(rng, n * n);
      std::vector<double> c1(n * n), c2(n * n);
      ref.mul(a.data(), b.data(), c1.data(), n);
      o->mul(a.data(), b.data(), c2.data(), n);
      // products and brackets must be bit-identical (same accumulation order)
      CHECK(std::memcmp(c1.data(), c2.data(), sizeof(double) * n * n) == 0);
      ref.bracket(a.data(), b.data(), c1.data(), n);
      o->bracket(a.data(), b.data(), c2.data(), n);
      CHECK(std::memcmp(c1.data(), c2.data(), sizeof(double) * n * n) == 0);

      double f1 = ref.frob2(a.data(), n * n), f2 = o->frob2(a.data(), n * n);
      CHECK(std::abs(f1 - f2) <= 1e-13 * std::abs(f1));
      double d1 = ref.dot(a.data(), b.data(), n * n), d2 = o->dot(a.data(), b.data(), n * n);
      CHECK(std::abs(d1 - d2) <= 1e-12 * (std::abs(d1) + 1));

      auto y1 = b, y2 = b;
      ref.axpy(0.37, a.data(), y1.data(), n * n);
      o->axpy(0.37, a.data(), y2.data(), n * n);
      CHECK(std::memcmp(y1.data(), y2.data(), sizeof(double) * n * n) == 0);
    }
  }
}

TEST_CASE("backend selection honors names and rejects unknown ones") {
  std::string initial = kern::ops().name;
  CHECK(kern::select("scalar"));
  CHECK(std::string(kern::ops().name) == "scalar");
  CHECK(!kern::select("not-a-backend"));
  CHECK(std::string(kern::ops().name) == "scalar");
  CHECK(kern::select(initial));  // restore
}

TEST_CASE("bracket of skew matrices is skew and matches the naive formula") {
  Rng rng(123);
  int n = 8;
  std::vector<double> a(n * n), b(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a[i * n + j] = rng.normal();
      a[j * n + i] = -a[i * n + j];
      b[i * n + j] = rng.normal();
      b[j * n + i] = -b[i * n + j];
    }
  std::vector<double> c(n * n);
  kern::ops().bracket(a.data(), b.data(), c.data(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double naive = 0;
      for (int k = 0; k < n; ++k)
        naive += a[i * n + k] * b[k * n + j] - b[i * n + k] * a[k * n + j];
      CHECK(c[i * n + j] == doctest::Approx(naive).epsilon(1e-12));
      CHECK(c[i * n + j] == doctest::Approx(-c[j * n + i]).epsilon(1e-12));
    }
}
