// Command-line front end: single-point verification, weight-lattice scans,
// and the Pontrjagin-class arithmetic.
//
// Exit codes for `verify`: 0 no-flat-plane, 1 flat-plane-found,
// 2 precondition failure or malformed input, 3 inconclusive.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <atomic>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpc/actions/freeness.hpp"
#include "qpc/charcls/pontrjagin.hpp"
#include "qpc/verify/verify.hpp"

namespace {

using namespace qpc;

std::vector<long> parse_ints(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw qpc::PreconditionError("malformed integer list entry: '" + item + "'");
    }
  }
  return out;
}

uint64_t env_seed(uint64_t fallback) {
  if (const char* s = std::getenv("QPC_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path: " + path);
  f << text;
  if (!f.good()) throw std::runtime_error("write failed: " + path);
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::no_flat_plane: return 0;
    case Verdict::flat_plane_found: return 1;
    case Verdict::inconclusive: return 3;
  }
  return 3;
}

VerifyMode parse_mode(const std::string& m) {
  if (m == "exact") return VerifyMode::exact;
  if (m == "numeric") return VerifyMode::numeric;
  if (m == "both") return VerifyMode::both;
  throw std::invalid_argument("mode must be exact, numeric, or both");
}

int run_verify(const std::string& target, const std::string& theta_text, const std::string& p_text,
               const std::string& q_text, const std::string& mode_text, uint64_t seed, int budget,
               int jobs, const std::string& out) {
  VerifyOptions opt;
  opt.mode = parse_mode(mode_text);
  opt.search.seed = seed;
  opt.search.restarts = budget;
  opt.search.jobs = jobs;

  PointCertificate cert;
  if (target == "m13" || target == "n11") {
    Angle th = parse_angle(theta_text);
    cert = target == "m13" ? verify_m13(th, opt) : verify_n11(th, opt);
  } else if (target == "eschenburg") {
    std::vector<long> p = parse_ints(p_text);
    std::vector<long> q = parse_ints(q_text);
    if (p.size() < 3) throw PreconditionError("need --p with at least three weights");
    if (q.size() != 2) throw PreconditionError("need --q with exactly two weights");
    cert = verify_eschenburg(p, {q[0], q[1]}, opt);
  } else {
    throw PreconditionError("target must be m13, n11, or eschenburg");
  }
  write_text(out, certificate_json(cert));
  return exit_code(cert.verdict);
}

struct ScanRow {
  std::vector<long> p;
  std::array<long, 2> q;
  bool free_ = false, hyp = false;
  std::string verdict;
  double residual = -1;
  int restarts = 0;
  uint64_t seed = 0;
  long ms = 0;
};

std::string join_colon(const std::vector<long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ":";
    s += std::to_string(v[i]);
  }
  return s;
}

int run_scan(int n, int bound, long qmin, long qmax, const std::string& mode_text, uint64_t seed,
             int budget, int jobs, const std::string& format, const std::string& out, bool timing) {
  if (n < 2) throw std::invalid_argument("--n must be at least 2");
  if (bound < 1) throw std::invalid_argument("--bound must be at least 1");
  if (budget < 1) throw std::invalid_argument("--budget must be at least 1");
  VerifyMode mode = parse_mode(mode_text);

  // canonical weight vectors: nondecreasing, deduplicating permutations
  std::vector<std::vector<long>> ps;
  std::vector<long> cur(size_t(n) + 1, -bound);
  for (;;) {
    ps.push_back(cur);
    int i = n;
    while (i >= 0 && cur[i] == bound) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j <= n; ++j) cur[j] = cur[i];
  }
  std::vector<ScanRow> rows;
  for (const auto& p : ps)
    for (long q1 = qmin; q1 <= qmax; ++q1)
      for (long q2 = qmin; q2 <= qmax; ++q2) {
        ScanRow r;
        r.p = p;
        r.q = {q1, q2};
        rows.push_back(std::move(r));
      }

  auto work = [&](size_t idx) {
    ScanRow& r = rows[idx];
    auto t0 = std::chrono::steady_clock::now();
    uint64_t h = 1469598103934665603ULL;
    for (long v : r.p) h = (h ^ uint64_t(v + 1000003)) * 1099511628211ULL;
    for (long v : r.q) h = (h ^ uint64_t(v + 1000003)) * 1099511628211ULL;
    r.seed = mix_seed(seed, h);
    r.free_ = eschenburg_free(r.p, r.q);
    r.hyp = qp_hypothesis(r.p, r.q);
    if (r.free_ && r.hyp) {
      VerifyOptions opt;
      opt.mode = mode;
      opt.search.seed = r.seed;
      opt.search.restarts = budget;
      opt.search.jobs = 1;  // parallelism lives at the row level
      PointCertificate cert = verify_eschenburg(r.p, r.q, opt);
      r.verdict = verdict_name(cert.verdict);
      r.residual = cert.residual_infimum;
      r.restarts = cert.restarts;
    }
    if (timing)
      r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                   t0)
                 .count();
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < rows.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= rows.size()) return;
          work(i);
        }
      });
    for (auto& t : pool) t.join();
  }

  std::ostringstream os;
  if (format == "csv") {
    os << "n,p,q,free,hypothesis,verdict,residual,restarts,seed,ms\n";
    for (const auto& r : rows) {
      char buf[64] = "";
      if (r.residual >= 0) std::snprintf(buf, sizeof buf, "%.17g", r.residual);
      os << n << "," << join_colon(r.p) << "," << r.q[0] << ":" << r.q[1] << ","
         << (r.free_ ? 1 : 0) << "," << (r.hyp ? 1 : 0) << "," << r.verdict << "," << buf << ","
         << r.restarts << "," << r.seed << "," << r.ms << "\n";
    }
  } else if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j;
      j["n"] = n;
      j["p"] = r.p;
      j["q"] = std::vector<long>(r.q.begin(), r.q.end());
      j["free"] = r.free_;
      j["hypothesis"] = r.hyp;
      j["verdict"] = r.verdict;
      if (r.residual >= 0) j["residual"] = r.residual;
      j["restarts"] = r.restarts;
      j["seed"] = r.seed;
      j["ms"] = r.ms;
      arr.push_back(j);
    }
    os << arr.dump(1) << "\n";
  } else {
    throw std::invalid_argument("format must be csv or json");
  }
  write_text(out, os.str());
  return 0;
}

int run_pontrjagin(const std::string& family, const std::string& q_text, bool integral, long mod) {
  if (integral || family == "m13") {
    IntegralP1 r = p1_integral_m13();
    std::cout << "|p1| = " << r.magnitude.get_str() << "\n";
    return 0;
  }
  std::vector<long> qv = parse_ints(q_text);
  if (qv.size() != 4) throw std::invalid_argument("need --q with four weights");
  Int c = p1_coefficient(family, {qv[0], qv[1], qv[2], qv[3]}, mod);
  std::cout << "p1 = " << c.get_str() << "·φ*(ū²)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for curvature and topology of biquotients"};
  app.require_subcommand(1);

  std::string target, theta = "pi/4", p_text, q_text, mode = "both", out, format = "csv";
  uint64_t seed = env_seed(2024);
  int budget = 1000, jobs = 1, n = 2, bound = 1;
  long qmin = 0, qmax = 0, mod = 0;
  bool integral = false, timing = false;

  auto* v = app.add_subcommand("verify", "certify quasi-positivity at the distinguished point");
  v->add_option("target", target, "m13 | n11 | eschenburg")->required();
  v->add_option("--theta", theta, "angle as a rational multiple of pi, e.g. pi/4");
  v->add_option("--p", p_text, "comma-separated circle weights");
  v->add_option("--q", q_text, "comma-separated right weights q1,q2");
  v->add_option("--mode", mode, "exact | numeric | both");
  v->add_option("--seed", seed, "search seed (default: QPC_SEED or 2024)");
  v->add_option("--budget", budget, "restart budget for the numeric search");
  v->add_option("--jobs", jobs, "worker threads for restarts");
  v->add_option("--out", out, "write the JSON certificate here instead of stdout");

  auto* s = app.add_subcommand("scan", "sweep an eschenburg weight lattice");
  s->add_option("--n", n, "chain parameter: weights have length n+1");
  s->add_option("--bound", bound, "enumerate |p_i| <= bound");
  s->add_option("--qmin", qmin, "lower bound for q1, q2");
  s->add_option("--qmax", qmax, "upper bound for q1, q2");
  s->add_option("--mode", mode, "exact | numeric | both");
  s->add_option("--seed", seed, "base seed; per-row seeds derive from it");
  s->add_option("--budget", budget, "restart budget per lattice point");
  s->add_option("--jobs", jobs, "worker threads over lattice points");
  s->add_option("--format", format, "csv | json");
  s->add_option("--out", out, "report path (default stdout)");
  s->add_flag("--timing", timing, "record wall-clock ms per row (breaks byte determinism)");

  auto* pc = app.add_subcommand("pontrjagin", "first Pontrjagin class of the named family");
  pc->add_option("target", target, "s1xg2 | so3xg2 | m13")->required();
  pc->add_option("--q", q_text, "four circle weights");
  pc->add_flag("--integral", integral, "integral magnitude via the fixture constraints");
  pc->add_option("--mod", mod, "reduce mod an odd prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (v->parsed()) return run_verify(target, theta, p_text, q_text, mode, seed, budget, jobs, out);
    if (s->parsed()) return run_scan(n, bound, qmin, qmax, mode, seed, budget, jobs, format, out, timing);
    if (pc->parsed()) return run_pontrjagin(target, q_text, integral, mod);
  } catch (const qpc::PreconditionError& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
