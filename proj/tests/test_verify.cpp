#include <array>
#include <cmath>

#include "doctest.h"
#include "qpc/metric/deformed.hpp"
#include "qpc/verify/normalize.hpp"
#include "qpc/verify/replay_eschenburg.hpp"
#include "qpc/verify/replay_so8.hpp"
#include "qpc/verify/verify.hpp"

using namespace qpc;

namespace {

const ReplayResult& m13_symbolic() {
  static const ReplayResult r = replay_so8_quotient_symbolic(false);
  return r;
}

bool branch_ok(const ReplayResult& r, const std::string& name) {
  for (const auto& b : r.branches)
    if (b.name == name) return b.ok;
  return false;
}

const ReplayResult& esch123() {
  static const ReplayResult r = replay_eschenburg({1, 2, 3}, {0, 0});
  return r;
}

}  // namespace

// ---- the circle-times-G2 case analysis, branch by branch ----

TEST_CASE("so8 replay: point lies in the group for symbolic angles") {
  CHECK(branch_ok(m13_symbolic(), "point-in-group"));
}
TEST_CASE("so8 replay: splitting and g2 structure") {
  CHECK(branch_ok(m13_symbolic(), "splitting-p-m-g2"));
  CHECK(branch_ok(m13_symbolic(), "g2-generators"));
}
TEST_CASE("so8 replay: rank-one bracket identity on p") {
  CHECK(branch_ok(m13_symbolic(), "p-bracket-wedge"));
}
TEST_CASE("so8 replay: Gram identity on m") {
  CHECK(branch_ok(m13_symbolic(), "m-bracket-gram"));
}
TEST_CASE("so8 replay: p-m bracket contraction") {
  CHECK(branch_ok(m13_symbolic(), "pm-bracket-contraction"));
}
TEST_CASE("so8 replay: rotated leg patterns") {
  CHECK(branch_ok(m13_symbolic(), "rotated-p-leg-pattern"));
  CHECK(branch_ok(m13_symbolic(), "rotated-m-leg-pattern"));
}
TEST_CASE("so8 replay: annihilated p-leg branch") {
  CHECK(branch_ok(m13_symbolic(), "p-leg-annihilated"));
}
TEST_CASE("so8 replay: proportional-legs branch") {
  CHECK(branch_ok(m13_symbolic(), "proportional-legs"));
}
TEST_CASE("so8 replay: annihilated m-leg branch") {
  CHECK(branch_ok(m13_symbolic(), "m-leg-annihilated"));
}
TEST_CASE("so8 replay: full symbolic proof") {
  CHECK(m13_symbolic().proved);
  CHECK(replay_so8_quotient_symbolic(true).proved);  // SO(3) extension
}

TEST_CASE("replays fail honestly when their hypotheses are violated") {
  // equal leading weights: the horizontality functional on p degenerates
  CHECK(!replay_eschenburg({1, 1, 3}, {0, 0}).proved);
  // p1 + p2 = 2 q1: one diagonal leg becomes horizontal
  CHECK(!replay_eschenburg({1, 3, 2}, {2, 2}).proved);
  // axis angle (cos, sin) = (1, 0): the annihilation branches lose their pivots
  CHECK(!replay_so8_quotient<Rat>(Rat(1), Rat(0), false).proved);
}

TEST_CASE("exact verdicts are identical at pi/4, pi/6, pi/3") {
  Quad2 c2, s2;
  c2 = inv_sqrt2();
  s2 = inv_sqrt2();
  ReplayResult at4 = replay_so8_quotient<Quad2>(c2, s2, false);
  ReplayResult at6 =
      replay_so8_quotient<Quad3>(Quad3(Rat(0), rat(1, 2)), Quad3(rat(1, 2)), false);
  ReplayResult at3 =
      replay_so8_quotient<Quad3>(Quad3(rat(1, 2)), Quad3(Rat(0), rat(1, 2)), false);
  CHECK(at4.proved);
  CHECK(at6.proved);
  CHECK(at3.proved);
  CHECK(at4.proved == m13_symbolic().proved);
}

TEST_CASE("angle parsing accepts rational multiples of pi only") {
  Angle a = parse_angle("pi/4");
  CHECK(a.num == 1);
  CHECK(a.den == 4);
  a = parse_angle("2pi/3");
  CHECK(a.num == 2);
  CHECK(a.den == 3);
  a = parse_angle("-pi/6");
  CHECK(a.num == -1);
  CHECK(a.den == 6);
  CHECK(parse_angle("0").num == 0);
  CHECK(parse_angle("2pi/4").den == 2);  // reduced
  CHECK_THROWS_AS(parse_angle("1.57"), PreconditionError);
}

// ---- the eschenburg case analysis, branch by branch ----

TEST_CASE("eschenburg replay: setup branches") {
  CHECK(branch_ok(esch123(), "point-in-group"));
  CHECK(branch_ok(esch123(), "splitting-p-m-h"));
  CHECK(branch_ok(esch123(), "symmetric-pair-brackets"));
}
TEST_CASE("eschenburg replay: rank-one leg identities") {
  CHECK(branch_ok(esch123(), "rank-one-legs"));
}
TEST_CASE("eschenburg replay: h-m bracket and diagonal commutation") {
  CHECK(branch_ok(esch123(), "h-m-bracket"));
  CHECK(branch_ok(esch123(), "h-diagonal-commutes"));
}
TEST_CASE("eschenburg replay: diagonal legs are not horizontal") {
  CHECK(branch_ok(esch123(), "diagonal-legs-not-horizontal"));
}
TEST_CASE("eschenburg replay: p-against-k bracket formulas") {
  CHECK(branch_ok(esch123(), "p-k-bracket-formulas"));
}
TEST_CASE("eschenburg replay: rotated row table") {
  CHECK(branch_ok(esch123(), "rotated-row-table"));
}
TEST_CASE("eschenburg replay: horizontality functional on p") {
  CHECK(branch_ok(esch123(), "p-horizontality-functional"));
}
TEST_CASE("eschenburg replay: shape-class eliminations") {
  CHECK(branch_ok(esch123(), "shape-diagonal-pair"));
  CHECK(branch_ok(esch123(), "shape-second-slot"));
  CHECK(branch_ok(esch123(), "shape-equal-slots"));
  CHECK(branch_ok(esch123(), "shape-first-slot"));
  CHECK(branch_ok(esch123(), "shape-p-plus-m"));
  CHECK(branch_ok(esch123(), "shape-p-corner"));
}
TEST_CASE("eschenburg replay: full proof and a larger n") {
  CHECK(esch123().proved);
  CHECK(replay_eschenburg({1, 2, 3, 5}, {0, 0}).proved);  // n = 3
}

// ---- end-to-end drivers ----

TEST_CASE("verify_m13 exact at pi/4 reports no flat plane") {
  VerifyOptions opt;
  opt.mode = VerifyMode::exact;
  PointCertificate c = verify_m13(Angle{1, 4}, opt);
  CHECK(c.verdict == Verdict::no_flat_plane);
  CHECK(c.exact_proved);
}

TEST_CASE("verify_m13 exact rejects axis angles") {
  VerifyOptions opt;
  opt.mode = VerifyMode::exact;
  CHECK_THROWS_AS(verify_m13(Angle{0, 1}, opt), PreconditionError);
  CHECK_THROWS_AS(verify_m13(Angle{1, 2}, opt), PreconditionError);
}

TEST_CASE("verify_n11 exact at pi/4; numeric dimension is 11") {
  VerifyOptions opt;
  opt.mode = VerifyMode::exact;
  PointCertificate c = verify_n11(Angle{1, 4}, opt);
  CHECK(c.verdict == Verdict::no_flat_plane);
  opt.mode = VerifyMode::numeric;
  opt.search.restarts = 60;
  opt.search.max_steps = 60;
  PointCertificate cn = verify_n11(Angle{1, 4}, opt);
  CHECK(cn.horizontal_dim == 11);
  CHECK(cn.residual_infimum > 1e-6);
}

TEST_CASE("numeric search at the identity point finds the planted flat plane") {
  // at A = I the pair X = P(e3), Y = M(e1) is horizontal and commutes
  auto hs = HorizontalSpace::so8_family(BiquotientSpec::m13(), 0.0, 0.5);
  std::array<double, 7> w{}, v{};
  w[2] = 1;
  v[0] = 1;
  Mat<double> X = so8_p(w), Y = embed_so7(so7_m(v));
  CHECK(std::abs(inner0(bracket(X, Y), bracket(X, Y))) < 1e-24);
  double res = hs.residual(X * (1 / std::sqrt(hs.product_inner(X, X))),
                           Y * (1 / std::sqrt(hs.product_inner(Y, Y))));
  CHECK(res < 1e-20);

  VerifyOptions opt;
  opt.mode = VerifyMode::numeric;
  opt.search.restarts = 100;
  opt.search.seed = 42;
  PointCertificate c = verify_m13(Angle{0, 1}, opt);
  CHECK(c.verdict == Verdict::flat_plane_found);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->residual < 1e-10);
  CHECK(c.witness->verticality < 1e-10);
}

TEST_CASE("witness frames satisfy the bracket conditions and rotate to p + m legs") {
  VerifyOptions opt;
  opt.mode = VerifyMode::numeric;
  opt.search.restarts = 100;
  opt.search.seed = 7;
  PointCertificate c = verify_m13(Angle{0, 1}, opt);
  REQUIRE(c.witness.has_value());
  const auto& w = *c.witness;
  // bracket conditions on both factors
  auto check_one_step = [&](const Mat<double>& x, const Mat<double>& y) {
    auto cx = so8_decompose(x);
    auto cy = so8_decompose(y);
    CHECK(std::abs(inner0(bracket(x, y), bracket(x, y))) < 1e-10);
    CHECK(std::abs(inner0(bracket(cx.p, cy.p), bracket(cx.p, cy.p))) < 1e-10);
  };
  check_one_step(w.w_a, w.w_b);
  // the frame rotates so one leg is in p, the other in m
  auto [x, y] = rotate_flat_frame_to_p_m(w.w_a, w.w_b);
  auto cx = so8_decompose(x);
  auto cy = so8_decompose(y);
  double off = std::abs(inner0(cx.m, cx.m)) + std::abs(inner0(cx.h, cx.h)) +
               std::abs(inner0(cy.p, cy.p)) + std::abs(inner0(cy.h, cy.h));
  CHECK(off < 1e-9);
}

TEST_CASE("search is deterministic: same seed, same trace; jobs do not matter") {
  auto hs = HorizontalSpace::so8_family(BiquotientSpec::m13(), 3.14159265358979 / 4, 0.5);
  SearchConfig cfg;
  cfg.restarts = 40;
  cfg.seed = 7;
  SearchResult a = min_residual_search(hs, cfg);
  SearchResult b = min_residual_search(hs, cfg);
  CHECK(a.residual == b.residual);
  CHECK(a.trace == b.trace);
  CHECK(a.best_restart == b.best_restart);
  cfg.jobs = 2;
  SearchResult c = min_residual_search(hs, cfg);
  CHECK(a.residual == c.residual);
  CHECK(a.best_restart == c.best_restart);
}

TEST_CASE("numeric floor persists at other angles") {
  VerifyOptions opt;
  opt.mode = VerifyMode::numeric;
  opt.search.restarts = 60;
  opt.search.max_steps = 60;
  PointCertificate c = verify_m13(Angle{1, 3}, opt);  // pi/3
  CHECK(c.residual_infimum > 1e-6);
  CHECK(!c.witness.has_value());
}

TEST_CASE("a zero restart budget is rejected") {
  auto hs = HorizontalSpace::so8_family(BiquotientSpec::m13(), 0.7, 0.5);
  SearchConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(min_residual_search(hs, cfg), std::invalid_argument);
}

TEST_CASE("certificates carry the distinguished point") {
  VerifyOptions opt;
  opt.mode = VerifyMode::exact;
  PointCertificate c = verify_eschenburg({1, 2, 3}, {0, 0}, opt);
  REQUIRE(c.point.rows() == 6);  // realified U(3)
  CHECK(c.point.at(0, 0) == doctest::Approx(1 / std::sqrt(2.0)));
  PointCertificate m = verify_m13(Angle{1, 4}, opt);
  REQUIRE(m.point.rows() == 8);
  CHECK(m.point.at(0, 0) == doctest::Approx(std::cos(3.14159265358979 / 4)));
}

TEST_CASE("verify_eschenburg: gates and verdicts") {
  VerifyOptions opt;
  opt.mode = VerifyMode::exact;
  PointCertificate c = verify_eschenburg({1, 2, 3}, {0, 0}, opt);
  CHECK(c.verdict == Verdict::no_flat_plane);

  // free but violating the hypothesis
  CHECK(eschenburg_free({0, 0, 0}, {-1, 1}));
  CHECK_THROWS_AS(verify_eschenburg({0, 0, 0}, {-1, 1}, opt), PreconditionError);
  // rejected by the freeness gate before any verification
  CHECK_THROWS_AS(verify_eschenburg({1, 2, 0, 0}, {0, 0}, opt), PreconditionError);
}

TEST_CASE("verify_eschenburg permutes the witnessing pair to the front") {
  VerifyOptions opt;
  opt.mode = VerifyMode::exact;
  // p1 = p2 here, so the witness must be found elsewhere and moved up
  PointCertificate c = verify_eschenburg({1, 1, 2}, {0, 0}, opt);
  CHECK(c.verdict == Verdict::no_flat_plane);
  CHECK(c.spec.p[0] != c.spec.p[1]);
}

TEST_CASE("orthogonalize_pair makes the second leg metric-orthogonal") {
  So8Chain<double> ch;
  auto m = Metric<So8Chain<double>>::one_step(ch, 0.5);
  Rng rng(5);
  Mat<double> x(8, 8), y(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      x.at(i, j) = rng.normal();
      x.at(j, i) = -x.at(i, j);
      y.at(i, j) = rng.normal();
      y.at(j, i) = -y.at(i, j);
    }
  auto inner = [&](const Mat<double>& a, const Mat<double>& b) { return m.inner(a, b); };
  auto [x2, y2] = orthogonalize_pair(x, y, inner);
  CHECK(std::abs(m.inner(x2, y2)) < 1e-10);
}

TEST_CASE("certificates serialize with branches, seed, and dims") {
  VerifyOptions opt;
  opt.mode = VerifyMode::both;
  opt.search.restarts = 30;
  opt.search.max_steps = 50;
  PointCertificate c = verify_eschenburg({1, 2, 3}, {0, 0}, opt);
  std::string js = certificate_json(c);
  CHECK(js.find("\"verdict\"") != std::string::npos);
  CHECK(js.find("\"branches\"") != std::string::npos);
  CHECK(js.find("\"seed\"") != std::string::npos);
  CHECK(js.find("\"horizontal_dim\"") != std::string::npos);
}
