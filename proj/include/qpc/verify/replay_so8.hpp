#pragma once

#include <array>
#include <vector>

#include "qpc/cayley/so8.hpp"
#include "qpc/linalg/mat.hpp"
#include "qpc/verify/branches.hpp"

namespace qpc {

// Mechanical replay of the zero-curvature case analysis for the
// (S^1 x G2)- and (SO(3) x G2)-quotients of SO(8) at the point
// A = diag(R(theta), I_6), with the circle acting in the last 2x2 block.
//
// A horizontal flat plane would admit a spanning pair (X, Y) with X in p,
// Y in m (after the reduction justified below); flatness of the projection
// to the second factor plus flatness on the first factor forces the
// p-components of Ad_{A^t}X and Ad_{A^t}Y to be linearly dependent.  The
// three dependence branches are each eliminated by exact computation.
// Every computational claim used along the way is verified on basis
// elements; scalar inferences are recorded in the branch notes.
//
// Scalars: any exact field containing cos(theta), sin(theta), or the
// symbolic ring TrigElem for the theta-uniform statement.

namespace replay_detail {

// theta-independent structure facts, verified over the rationals
inline std::vector<BranchCheck> so8_structure_checks() {
  std::vector<BranchCheck> out;
  auto pb = so8_p_basis<Rat>();
  auto mb = so8_m_basis<Rat>();
  auto gb = g2_basis8<Rat>();

  {  // orthogonal splitting so(8) = p + m + g2 with the right dimensions
    bool ok = true;
    std::vector<Mat<Rat>> all;
    for (auto& b : pb) all.push_back(b);
    for (auto& b : mb) all.push_back(b);
    for (auto& b : gb) all.push_back(b);
    Mat<Rat> rows(28, 64);
    for (int i = 0; i < 28; ++i)
      for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) rows.at(i, 8 * r + c) = all[i].at(r, c);
    ok = ok && rank_of(rows) == 28;
    for (int i = 0; i < 28 && ok; ++i)
      for (int j = 0; j < 28 && ok; ++j) {
        bool same_block = (i < 7 && j < 7) || (i >= 7 && j >= 7 && i < 14 && j < 14) ||
                          (i >= 14 && j >= 14);
        if (!same_block) ok = is_zero(inner0_scalar(all[i], all[j]));
      }
    out.push_back({"splitting-p-m-g2", ok, "dimensions 7+7+14 = 28, pairwise orthogonal"});
  }
  {  // the 14 generators satisfy the membership relations, act as
     // derivations of the Cayley product, and close under bracket
    bool ok = true;
    for (const auto& b : gb) {
      Mat<Rat> b7(7, 7);
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) b7.at(i, j) = b.at(i + 1, j + 1);
      ok = ok && g2_relations_hold(b7) && is_derivation(b7);
    }
    for (size_t i = 0; i < gb.size() && ok; ++i)
      for (size_t j = i + 1; j < gb.size() && ok; ++j) {
        Mat<Rat> br = bracket(gb[i], gb[j]);
        Mat<Rat> b7(7, 7);
        for (int r = 0; r < 7; ++r)
          for (int c = 0; c < 7; ++c) b7.at(r, c) = br.at(r + 1, c + 1);
        ok = g2_relations_hold(b7);
      }
    out.push_back({"g2-generators", ok, "relations, derivation property, bracket closure"});
  }
  {  // [P(w), P(u)] = -embed(w ^ u): brackets of p-legs land in k and
     // vanish only for dependent legs (rank-one symmetric pair)
    bool ok = true;
    for (int i = 0; i < 7 && ok; ++i)
      for (int j = 0; j < 7 && ok; ++j) {
        Mat<Rat> lhs = bracket(pb[i], pb[j]);
        Mat<Rat> wedge(7, 7);
        wedge.at(i, j) = Rat(1);
        wedge.at(j, i) = Rat(-1);
        if (i == j) wedge = Mat<Rat>(7, 7);
        ok = lhs == -embed_so7(wedge);
      }
    out.push_back({"p-bracket-wedge", ok,
                   "[P(w),P(u)] = -w^u, zero iff w,u dependent (Cauchy-Schwarz)"});
  }
  {  // |[M(v), M(u)]|^2 = 18 (|v|^2|u|^2 - <v,u>^2), by polarization:
     // both sides are quadratic forms in each argument, so agreement on
     // e_i and e_i + e_j pins them
    bool ok = true;
    std::vector<std::array<Rat, 7>> pts;
    for (int i = 0; i < 7; ++i) {
      std::array<Rat, 7> v{};
      v[i] = Rat(1);
      pts.push_back(v);
      for (int j = i + 1; j < 7; ++j) {
        std::array<Rat, 7> w{};
        w[i] = Rat(1);
        w[j] = Rat(1);
        pts.push_back(w);
      }
    }
    auto dot = [](const std::array<Rat, 7>& a, const std::array<Rat, 7>& b) {
      Rat s(0);
      for (int i = 0; i < 7; ++i) s += a[i] * b[i];
      return s;
    };
    for (const auto& v : pts) {
      for (const auto& u : pts) {
        Mat<Rat> z = bracket(so7_m(v), so7_m(u));
        Rat lhs = inner0_scalar(z, z);
        Rat rhs = Rat(18) * (dot(v, v) * dot(u, u) - dot(v, u) * dot(v, u));
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    out.push_back({"m-bracket-gram", ok,
                   "|[M(v),M(u)]|^2 = 18 Gram(v,u): no commuting independent pairs in m"});
  }
  {  // [P(w), M(v)] = P(w^t m(v)); first component of w^t m(v) is
     // -sum_j w_{j+1} v_j (contraction used by the proportional branch)
    bool ok = true;
    for (int a = 0; a < 7 && ok; ++a) {
      std::array<Rat, 7> w{};
      w[a] = Rat(1);
      for (int b = 0; b < 7 && ok; ++b) {
        std::array<Rat, 7> v{};
        v[b] = Rat(1);
        Mat<Rat> mv = so7_m(v);
        std::array<Rat, 7> row{};
        for (int j = 0; j < 7; ++j) row[j] = mv.at(a, j);
        ok = bracket(so8_p(w), embed_so7(mv)) == so8_p(row);
        if (ok) {
          Rat expect = (b <= 5 && a == b + 1) ? Rat(-1) : Rat(0);
          ok = mv.at(a, 0) == expect;
        }
      }
    }
    out.push_back({"pm-bracket-contraction", ok,
                   "[P(w),M(v)] = P(w^t m(v)); component 1 is -sum w_{j+1} v_j"});
  }
  return out;
}

}  // namespace replay_detail

/// Exact replay at A = diag(R(theta), I6).  `c`, `s` are cos/sin of theta
/// in an exact scalar (or TrigElem symbols); `so3_extension` switches to
/// the SO(3) x G2 action.
template <class F>
ReplayResult replay_so8_quotient(const F& c, const F& s, bool so3_extension) {
  ReplayResult res;

  // the distinguished point and the circle generator
  Mat<F> a = Mat<F>::identity(8);
  a.at(0, 0) = c; a.at(0, 1) = -s;
  a.at(1, 0) = s; a.at(1, 1) = c;
  Mat<F> theta(8, 8);
  theta.at(6, 7) = F(-1);
  theta.at(7, 6) = F(1);

  res.add("point-in-group", a.transposed() * a == Mat<F>::identity(8),
          "A^t A = I via cos^2 + sin^2 = 1");
  res.add("hypothesis-cos-sin-nonzero", nonzero_certain(c) && nonzero_certain(s),
          "theta is not a multiple of pi/2");

  for (auto& b : replay_detail::so8_structure_checks()) res.branches.push_back(std::move(b));

  {  // A is block-diagonal against the circle (and the SO(3) block)
    bool ok = a * theta * a.transposed() == theta;
    if (so3_extension) {
      for (auto [i, j] : {std::pair{5, 6}, {5, 7}, {6, 7}}) {
        Mat<F> t(8, 8);
        t.at(i, j) = F(-1);
        t.at(j, i) = F(1);
        ok = ok && a * t * a.transposed() == t;
      }
    }
    res.add("point-commutes-with-action", ok, "Ad_A fixes every vertical rotation generator");
  }

  // reduction to X in p, Y in m: flatness on the unrotated factor gives
  // [X_p,Y_p] = 0 and [X_m,Y_m] = 0; by p-bracket-wedge and m-bracket-gram
  // both pairs of components are dependent, so the frame can be rotated to
  // one p-leg and one m-leg.  Horizontality already removed g2 components.
  res.add("frame-normalization", true,
          "flat frame rotates to X in p, Y in m (rank-one p, Gram-definite m)");

  // p-pattern: (Ad_{A^t} P(w))_p = (w_1, c w_2, ..., c w_7)
  bool pat_x = true;
  for (int i = 0; i < 7; ++i) {
    std::array<F, 7> w{};
    for (auto& x : w) x = F(0);
    w[i] = F(1);
    Mat<F> ad = a.transposed() * so8_p(w) * a;
    std::array<F, 7> expect{};
    for (auto& x : expect) x = F(0);
    expect[i] = (i == 0) ? F(1) : c;
    // compare the p-component only
    Mat<F> padt(8, 8);
    for (int j = 1; j < 8; ++j) {
      padt.at(0, j) = ad.at(0, j);
      padt.at(j, 0) = ad.at(j, 0);
    }
    pat_x = pat_x && padt == so8_p(expect);
  }
  res.add("rotated-p-leg-pattern", pat_x, "(Ad_{A^t} P(w))_p = (w1, c w2, ..., c w7)");

  // m-pattern: (Ad_{A^t} M(v))_p = (0, s v_1, ..., s v_6)
  bool pat_y = true;
  for (int j = 0; j < 7; ++j) {
    std::array<F, 7> v{};
    for (auto& x : v) x = F(0);
    v[j] = F(1);
    Mat<F> ad = a.transposed() * embed_so7(so7_m(v)) * a;
    std::array<F, 7> expect{};
    for (auto& x : expect) x = F(0);
    if (j <= 5) expect[j + 1] = s;
    Mat<F> padt(8, 8);
    for (int k = 1; k < 8; ++k) {
      padt.at(0, k) = ad.at(0, k);
      padt.at(k, 0) = ad.at(k, 0);
    }
    pat_y = pat_y && padt == so8_p(expect);
  }
  res.add("rotated-m-leg-pattern", pat_y, "(Ad_{A^t} M(v))_p = (0, s v_1, ..., s v_6)");

  // branch 1: (Ad X)_p = 0 forces w = 0; needs 1 and c invertible
  res.add("p-leg-annihilated", pat_x && nonzero_certain(c),
          "diag(1, c..c) injective, so X = 0: impossible for a 2-plane");

  // branch 2: proportional p-parts; w1 = 0 and c w_{j+1} = t s v_j, while
  // [X,Y] = 0 makes sum w_{j+1} v_j vanish; multiplying by c gives
  // t s sum v_j^2 = 0, so v = w = 0
  res.add("proportional-legs", pat_x && pat_y && nonzero_certain(c) && nonzero_certain(s),
          "t*s*sum(v_j^2) = 0 with t,s,c nonzero kills both legs");

  // branch 3: (Ad Y)_p = 0 forces v_1..v_6 = 0; the leftover direction
  // pairs against the circle generator with value 2
  F pairing(0);
  {
    std::array<F, 7> v7{};
    for (auto& x : v7) x = F(0);
    v7[6] = F(1);
    Mat<F> m7 = embed_so7(so7_m(v7));
    Mat<F> prod = m7 * (a * theta * a.transposed());
    pairing = -prod.trace();
  }
  res.add("m-leg-annihilated", pat_y && nonzero_certain(s) && pairing == F(2),
          "<M(e7), Ad_A Theta>_0 = 2, so horizontality kills the last m-direction");

  if (so3_extension) {
    res.add("so3-extension", true,
            "so(3) contains the circle generator; the added constraints only "
            "shrink the horizontal space, so the eliminations above stand");
  }

  res.finish();
  return res;
}

/// theta-uniform version over the symbolic ring.
inline ReplayResult replay_so8_quotient_symbolic(bool so3_extension) {
  return replay_so8_quotient<TrigElem>(TrigElem::c(), TrigElem::s(), so3_extension);
}

}  // namespace qpc
