#include "qpc/actions/freeness.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

namespace qpc {

bool eschenburg_free(const std::vector<long>& p, const std::array<long, 2>& q) {
  if (p.size() < 3) throw std::invalid_argument("eschenburg weights need length n+1 >= 3");
  const size_t m = p.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if (std::gcd(p[i] - q[0], p[j] - q[1]) != 1) return false;
    }
  return true;
}

HypothesisWitness qp_hypothesis_witness(const std::vector<long>& p, const std::array<long, 2>& q) {
  if (p.size() < 3) throw std::invalid_argument("eschenburg weights need length n+1 >= 3");
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) continue;
      long s = p[i] + p[j];
      if (s != 2 * q[0] && s != 2 * q[1] && s != q[0] + q[1])
        return {true, int(i), int(j)};
    }
  return {};
}

bool qp_hypothesis(const std::vector<long>& p, const std::array<long, 2>& q) {
  return qp_hypothesis_witness(p, q).holds;
}

bool s1_g2_free(long p1, long p2, long p3) {
  if (p1 == 0 && p2 == 0 && p3 == 0) throw std::invalid_argument("circle weights must not all vanish");
  const std::array<long, 4> coef{0, p1, p2, p3};
  std::array<int, 4> perm{0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    const long l0 = coef[perm[0]];
    const long la = coef[perm[1]], lb = coef[perm[2]], ls = coef[perm[3]];
    for (int sa : {1, -1})
      for (int sb : {1, -1})
        for (int ss : {1, -1}) {
          // torus slots (0, a, b, a+b): the zero slot gives l0 t = 0 and the
          // additivity constraint gives (sa la + sb lb - ss ls) t = 0
          long m1 = std::abs(l0);
          long m2 = std::abs(sa * la + sb * lb - ss * ls);
          long g = std::gcd(m1, m2);
          // g = 0: every t solves; g >= 2: t = 2pi/g is a nontrivial solution.
          // Either way some nontrivial circle element is conjugate to a torus
          // element, so the action is not free.
          if (g != 1) return false;
        }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

namespace {

// angle class of k/grid turns: cos-equivalence, i.e. k ~ -k (mod grid)
inline int angle_class(long k, int grid) {
  long r = k % grid;
  if (r < 0) r += grid;
  return int(std::min(r, long(grid) - r));
}

inline uint64_t pack4(std::array<int, 4> t) {
  std::sort(t.begin(), t.end());
  return (uint64_t(t[0]) << 48) | (uint64_t(t[1]) << 32) | (uint64_t(t[2]) << 16) | uint64_t(t[3]);
}

const std::unordered_set<uint64_t>& torus_multisets(int grid) {
  static int cached_grid = 0;
  static std::unordered_set<uint64_t> cache;
  if (cached_grid != grid) {
    cache.clear();
    for (long a = 0; a < grid; ++a)
      for (long b = 0; b < grid; ++b)
        cache.insert(pack4({0, angle_class(a, grid), angle_class(b, grid), angle_class(a + b, grid)}));
    cached_grid = grid;
  }
  return cache;
}

}  // namespace

bool s1_g2_free_grid(long p1, long p2, long p3, int grid) {
  if (p1 == 0 && p2 == 0 && p3 == 0) throw std::invalid_argument("circle weights must not all vanish");
  const auto& torus = torus_multisets(grid);
  for (long k = 1; k < grid; ++k) {
    uint64_t key = pack4(
        {0, angle_class(p1 * k, grid), angle_class(p2 * k, grid), angle_class(p3 * k, grid)});
    if (torus.count(key)) return false;
  }
  return true;
}

bool simply_connected_parity(const std::array<long, 4>& q) {
  if (q == std::array<long, 4>{0, 0, 0, 0})
    throw std::invalid_argument("embedding weights must not all vanish");
  long s = q[0] + q[1] + q[2] + q[3];
  return ((s % 2) + 2) % 2 == 1;
}

bool eschenburg_free_roots_oracle(const std::vector<long>& p, const std::array<long, 2>& q,
                                  int order) {
  if (p.size() != 3) throw std::invalid_argument("roots oracle covers n = 2 only");
  auto mod = [order](long x) { return int(((x % order) + order) % order); };
  for (int k = 1; k < order; ++k) {
    // left eigenvalues as exponents of the primitive root
    std::array<int, 3> left{mod(long(k) * p[0]), mod(long(k) * p[1]), mod(long(k) * p[2])};
    // conjugate iff {k q1, k q2} embeds into the left multiset (the U(n-1)
    // slot absorbs whatever remains)
    std::array<int, 2> right{mod(long(k) * q[0]), mod(long(k) * q[1])};
    std::array<int, 3> rem = left;
    bool ok0 = false;
    for (int i = 0; i < 3 && !ok0; ++i)
      if (rem[i] == right[0]) {
        rem[i] = -1;
        ok0 = true;
      }
    if (!ok0) continue;
    bool ok1 = false;
    for (int i = 0; i < 3 && !ok1; ++i)
      if (rem[i] == right[1]) ok1 = true;
    if (ok1) return false;  // nontrivial z with conjugate sides
  }
  return true;
}

}  // namespace qpc
