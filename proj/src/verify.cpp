#include "qpc/verify/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "qpc/actions/freeness.hpp"
#include "qpc/config.hpp"
#include "qpc/verify/replay_eschenburg.hpp"
#include "qpc/verify/replay_so8.hpp"

namespace qpc {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::no_flat_plane: return "no-flat-plane";
    case Verdict::flat_plane_found: return "flat-plane-found";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string mode_name(VerifyMode m) {
  switch (m) {
    case VerifyMode::exact: return "exact";
    case VerifyMode::numeric: return "numeric";
    case VerifyMode::both: return "both";
  }
  return "?";
}

Angle parse_angle(const std::string& text) {
  // accepted: "0", "pi", "pi/4", "2pi/3", "-pi/6"
  std::string t = text;
  long num = 1, den = 1;
  bool neg = false;
  size_t pos = 0;
  if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) {
    neg = t[pos] == '-';
    ++pos;
  }
  size_t pi_at = t.find("pi", pos);
  if (pi_at == std::string::npos) {
    if (t.substr(pos) == "0") return Angle{0, 1};
    throw PreconditionError("angles must be rational multiples of pi, e.g. pi/4 (got '" + text + "')");
  }
  if (pi_at > pos) num = std::stol(t.substr(pos, pi_at - pos));
  size_t rest = pi_at + 2;
  if (rest < t.size()) {
    if (t[rest] != '/') throw PreconditionError("bad angle syntax: '" + text + "'");
    den = std::stol(t.substr(rest + 1));
    if (den <= 0) throw PreconditionError("angle denominator must be positive");
  }
  if (neg) num = -num;
  long g = std::gcd(std::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Angle{num, den};
}

std::string angle_name(const Angle& a) {
  if (a.num == 0) return "0";
  std::string s = (a.num == 1 ? "" : a.num == -1 ? "-" : std::to_string(a.num)) + "pi";
  if (a.den != 1) s += "/" + std::to_string(a.den);
  return s;
}

namespace {

double angle_value(const Angle& a) {
  return 3.14159265358979323846264338327950288 * double(a.num) / double(a.den);
}

bool on_axes(const Angle& a) {
  // theta = n pi / 2 <=> reduced denominator is 1 or 2
  return a.den == 1 || a.den == 2 || a.num == 0;
}

// cos/sin of num*pi/4 in Q(sqrt2)
bool quad2_cos_sin(const Angle& a, Quad2& c, Quad2& s) {
  if (a.den != 4) return false;
  long k = ((a.num % 8) + 8) % 8;  // multiples of pi/4
  auto val = [](long m) {  // cos(m pi / 4)
    switch (((m % 8) + 8) % 8) {
      case 0: return Quad2(Rat(1));
      case 1: return inv_sqrt2();
      case 2: return Quad2(Rat(0));
      case 3: return -inv_sqrt2();
      case 4: return Quad2(Rat(-1));
      case 5: return -inv_sqrt2();
      case 6: return Quad2(Rat(0));
      default: return inv_sqrt2();
    }
  };
  c = val(k);
  s = val(k - 2);  // sin t = cos(t - pi/2)
  return true;
}

// cos/sin of num*pi/den for den in {3, 6} in Q(sqrt3)
bool quad3_cos_sin(const Angle& a, Quad3& c, Quad3& s) {
  if (a.den != 3 && a.den != 6) return false;
  long sixths = a.num * (6 / a.den);  // multiples of pi/6
  auto val = [](long m) {  // cos(m pi/6)
    static const Quad3 h3(Rat(0), rat(1, 2));  // sqrt(3)/2
    switch (((m % 12) + 12) % 12) {
      case 0: return Quad3(Rat(1));
      case 1: return h3;
      case 2: return Quad3(rat(1, 2));
      case 3: return Quad3(Rat(0));
      case 4: return Quad3(rat(-1, 2));
      case 5: return -h3;
      case 6: return Quad3(Rat(-1));
      case 7: return -h3;
      case 8: return Quad3(rat(-1, 2));
      case 9: return Quad3(Rat(0));
      case 10: return Quad3(rat(1, 2));
      default: return h3;
    }
  };
  c = val(sixths);
  s = val(sixths - 3);
  return true;
}

void run_numeric(PointCertificate& cert, const HorizontalSpace& hs, const VerifyOptions& opt) {
  cert.numeric_ran = true;
  cert.horizontal_dim = hs.dim();
  SearchResult sr = min_residual_search(hs, opt.search);
  cert.residual_infimum = sr.residual;
  cert.restarts = sr.restarts;
  cert.seed = sr.seed;
  cert.descent_trace = sr.trace;

  if (sr.residual < tol().witness) {
    PointCertificate::Witness w;
    w.w_a = hs.w_of_coeffs(sr.coeff_a.data());
    w.w_b = hs.w_of_coeffs(sr.coeff_b.data());
    auto pa = hs.pair_of(w.w_a), pb = hs.pair_of(w.w_b);
    w.left_a = pa.first; w.right_a = pa.second;
    w.left_b = pb.first; w.right_b = pb.second;
    w.residual = sr.residual;
    double vmax = 0;
    for (const auto& v : hs.vertical_generators()) {
      vmax = std::max(vmax, std::abs(hs.pair_inner(pa, v)));
      vmax = std::max(vmax, std::abs(hs.pair_inner(pb, v)));
    }
    w.verticality = vmax;
    cert.witness = std::move(w);
  }
}

Verdict combine_verdicts(const PointCertificate& cert, const VerifyOptions& opt) {
  if (cert.witness && cert.witness->verticality < tol().horizontality)
    return Verdict::flat_plane_found;
  if (cert.exact_ran && cert.exact_proved) return Verdict::no_flat_plane;
  if (cert.numeric_ran && cert.residual_infimum > tol().positivity &&
      cert.restarts >= opt.min_restarts_for_verdict)
    return Verdict::no_flat_plane;
  return Verdict::inconclusive;
}

PointCertificate verify_so8_point(const Angle& theta, bool so3, const VerifyOptions& opt) {
  PointCertificate cert;
  cert.target = so3 ? "n11" : "m13";
  cert.spec = so3 ? BiquotientSpec::n11() : BiquotientSpec::m13();
  cert.theta = angle_name(theta);
  cert.mode = opt.mode;

  if (opt.mode != VerifyMode::numeric) {
    if (on_axes(theta))
      throw PreconditionError("exact mode requires theta away from multiples of pi/2");
    cert.exact_ran = true;
    ReplayResult sym = replay_so8_quotient_symbolic(so3);
    cert.branches = sym.branches;
    bool inst_ok = true;
    Quad2 c2, s2;
    Quad3 c3, s3;
    if (quad2_cos_sin(theta, c2, s2)) {
      ReplayResult inst = replay_so8_quotient<Quad2>(c2, s2, so3);
      inst_ok = inst.proved;
      cert.branches.push_back({"instantiation-" + angle_name(theta), inst.proved,
                               "case analysis re-run over Q(sqrt2)"});
    } else if (quad3_cos_sin(theta, c3, s3)) {
      ReplayResult inst = replay_so8_quotient<Quad3>(c3, s3, so3);
      inst_ok = inst.proved;
      cert.branches.push_back({"instantiation-" + angle_name(theta), inst.proved,
                               "case analysis re-run over Q(sqrt3)"});
    } else {
      cert.branches.push_back({"instantiation-" + angle_name(theta), true,
                               "no quadratic instantiation for this denominator; the "
                               "symbolic replay covers every theta off the axes"});
    }
    cert.exact_proved = sym.proved && inst_ok;
  }
  {
    HorizontalSpace hs =
        HorizontalSpace::so8_family(cert.spec, angle_value(theta), 0.5);
    cert.point = hs.point();
    if (opt.mode != VerifyMode::exact) run_numeric(cert, hs, opt);
  }
  cert.verdict = combine_verdicts(cert, opt);
  if (cert.exact_ran && cert.exact_proved && cert.witness)
    cert.note = "exact proof and numeric witness disagree; investigate";
  return cert;
}

}  // namespace

PointCertificate verify_m13(const Angle& theta, const VerifyOptions& opt) {
  return verify_so8_point(theta, false, opt);
}

PointCertificate verify_n11(const Angle& theta, const VerifyOptions& opt) {
  return verify_so8_point(theta, true, opt);
}

PointCertificate verify_eschenburg(std::vector<long> p, std::array<long, 2> q,
                                   const VerifyOptions& opt) {
  if (p.size() < 3) throw PreconditionError("eschenburg weights need length n+1 >= 3");
  if (!eschenburg_free(p, q)) throw PreconditionError("action is not free: gcd condition fails");
  HypothesisWitness hw = qp_hypothesis_witness(p, q);
  if (!hw.holds)
    throw PreconditionError(
        "hypothesis fails: no pair with p_i != p_j and p_i + p_j outside {2q1, 2q2, q1+q2}");
  // permute the witnessing pair to the front (induces a diffeomorphism)
  std::vector<long> pp;
  pp.push_back(p[hw.i]);
  pp.push_back(p[hw.j]);
  for (size_t k = 0; k < p.size(); ++k)
    if (int(k) != hw.i && int(k) != hw.j) pp.push_back(p[k]);

  PointCertificate cert;
  cert.target = "eschenburg";
  cert.spec = BiquotientSpec::eschenburg_spec(pp, q);
  cert.mode = opt.mode;
  if (hw.i != 0 || hw.j != 1) cert.note = "weights permuted to put the witnessing pair first";

  if (opt.mode != VerifyMode::numeric) {
    cert.exact_ran = true;
    ReplayResult rr = replay_eschenburg(pp, q);
    cert.branches = rr.branches;
    cert.exact_proved = rr.proved;
  }
  {
    HorizontalSpace hs = HorizontalSpace::eschenburg_family(cert.spec, 0.5, 0.5);
    cert.point = hs.point();
    if (opt.mode != VerifyMode::exact) run_numeric(cert, hs, opt);
  }
  cert.verdict = combine_verdicts(cert, opt);
  return cert;
}

namespace {

nlohmann::json mat_json(const Mat<double>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

std::string certificate_json(const PointCertificate& c) {
  nlohmann::json j;
  j["target"] = c.target;
  j["spec"] = nlohmann::json::parse(to_json(c.spec));
  if (!c.theta.empty()) j["theta"] = c.theta;
  j["mode"] = mode_name(c.mode);
  j["verdict"] = verdict_name(c.verdict);
  if (c.point.rows() > 0) j["point"] = mat_json(c.point);
  if (c.exact_ran) {
    j["exact"]["proved"] = c.exact_proved;
    nlohmann::json br = nlohmann::json::array();
    for (const auto& b : c.branches)
      br.push_back({{"name", b.name}, {"ok", b.ok}, {"note", b.note}});
    j["exact"]["branches"] = br;
  }
  if (c.numeric_ran) {
    j["numeric"]["residual_infimum"] = c.residual_infimum;
    j["numeric"]["restarts"] = c.restarts;
    j["numeric"]["seed"] = c.seed;
    j["numeric"]["horizontal_dim"] = c.horizontal_dim;
    j["numeric"]["descent_trace"] = c.descent_trace;
  }
  if (c.witness) {
    j["witness"]["residual"] = c.witness->residual;
    j["witness"]["verticality"] = c.witness->verticality;
    j["witness"]["w_a"] = mat_json(c.witness->w_a);
    j["witness"]["w_b"] = mat_json(c.witness->w_b);
    j["witness"]["left_a"] = mat_json(c.witness->left_a);
    j["witness"]["right_a"] = mat_json(c.witness->right_a);
    j["witness"]["left_b"] = mat_json(c.witness->left_b);
    j["witness"]["right_b"] = mat_json(c.witness->right_b);
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j.dump(2);
}

}  // namespace qpc
