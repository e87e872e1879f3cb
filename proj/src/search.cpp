#include "qpc/verify/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qpc/config.hpp"
#include "qpc/kernels/kernels.hpp"

namespace qpc {

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = uniform(), u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 6.283185307179586476925286766559 * u2;
  cached_ = r * std::sin(a);
  has_cached_ = true;
  return r * std::cos(a);
}

namespace {

struct Evaluator {
  const HorizontalSpace& hs;
  int d;

  // orthonormalize coefficients in place; false when the frame is degenerate
  bool orthonormalize(double* a, double* b) const {
    const auto& k = kern::ops();
    double na = std::sqrt(k.dot(a, a, d));
    if (na < 1e-12) return false;
    for (int i = 0; i < d; ++i) a[i] /= na;
    double proj = k.dot(a, b, d);
    k.axpy(-proj, a, b, d);
    double nb2 = k.dot(b, b, d);
    if (nb2 < tol().frame_gram) return false;
    double nb = std::sqrt(nb2);
    for (int i = 0; i < d; ++i) b[i] /= nb;
    return true;
  }

  double residual_orthonormal(const double* a, const double* b) const {
    Mat<double> wa = hs.w_of_coeffs(a);
    Mat<double> wb = hs.w_of_coeffs(b);
    return hs.residual(wa, wb);
  }

  // residual of an arbitrary coefficient pair (+inf when degenerate)
  double operator()(const std::vector<double>& x) const {
    std::vector<double> a(x.begin(), x.begin() + d), b(x.begin() + d, x.end());
    if (!orthonormalize(a.data(), b.data())) return std::numeric_limits<double>::infinity();
    return residual_orthonormal(a.data(), b.data());
  }
};

struct RestartOutcome {
  double residual = std::numeric_limits<double>::infinity();
  std::vector<double> x;
  std::vector<double> trace;
};

RestartOutcome run_restart(const Evaluator& ev, uint64_t seed, const SearchConfig& cfg,
                           bool record_trace) {
  Rng rng(seed);
  const int dd = 2 * ev.d;
  std::vector<double> x(dd);
  // resample until the raw frame is not degenerate
  for (int tries = 0; tries < 64; ++tries) {
    for (auto& v : x) v = rng.normal();
    if (std::isfinite(ev(x))) break;
  }
  RestartOutcome out;
  double f = ev(x);
  if (!std::isfinite(f)) return out;
  if (record_trace) out.trace.push_back(f);

  double step = 0.3;
  std::vector<double> g(dd), xn(dd);
  for (int it = 0; it < cfg.max_steps; ++it) {
    if (f < cfg.stop_residual) break;
    const double h = 1e-7;
    for (int i = 0; i < dd; ++i) {
      xn = x;
      xn[i] += h;
      double fp = ev(xn);
      g[i] = std::isfinite(fp) ? (fp - f) / h : 0.0;
    }
    double gn = std::sqrt(kern::ops().dot(g.data(), g.data(), dd));
    if (gn < 1e-15) break;
    double t = step;
    bool moved = false;
    while (t > 1e-13) {
      for (int i = 0; i < dd; ++i) xn[i] = x[i] - t * g[i] / gn;
      double fn = ev(xn);
      if (std::isfinite(fn) && fn < f - 1e-18) {
        x = xn;
        f = fn;
        step = std::min(0.3, 2.0 * t);
        moved = true;
        if (record_trace) out.trace.push_back(f);
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
  }
  out.residual = f;
  out.x = x;
  return out;
}

}  // namespace

double frame_residual(const HorizontalSpace& hs, std::vector<double> a, std::vector<double> b) {
  Evaluator ev{hs, hs.dim()};
  if (!ev.orthonormalize(a.data(), b.data())) return std::numeric_limits<double>::infinity();
  return ev.residual_orthonormal(a.data(), b.data());
}

SearchResult min_residual_search(const HorizontalSpace& hs, const SearchConfig& cfg) {
  if (cfg.restarts < 1) throw std::invalid_argument("restart budget must be positive");
  if (hs.dim() < 2) throw std::invalid_argument("horizontal space has no 2-frames");
  Evaluator ev{hs, hs.dim()};

  struct Best {
    double residual = std::numeric_limits<double>::infinity();
    int restart = -1;
  };
  int jobs = std::max(1, cfg.jobs);
  std::vector<Best> bests(jobs);
  auto worker = [&](int wi) {
    Best local;
    for (int r = wi; r < cfg.restarts; r += jobs) {
      RestartOutcome o = run_restart(ev, mix_seed(cfg.seed, uint64_t(r)), cfg, false);
      if (o.residual < local.residual ||
          (o.residual == local.residual && r < local.restart)) {
        local.residual = o.residual;
        local.restart = r;
      }
    }
    bests[wi] = local;
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  Best merged;
  for (const auto& b : bests)
    if (b.residual < merged.residual ||
        (b.residual == merged.residual && b.restart != -1 &&
         (merged.restart == -1 || b.restart < merged.restart)))
      merged = b;

  // replay the winning restart to recover frame and descent trace
  RestartOutcome o = run_restart(ev, mix_seed(cfg.seed, uint64_t(merged.restart)), cfg, true);
  SearchResult res;
  res.residual = o.residual;
  res.best_restart = merged.restart;
  res.restarts = cfg.restarts;
  res.seed = cfg.seed;
  res.trace = std::move(o.trace);
  std::vector<double> a(o.x.begin(), o.x.begin() + hs.dim());
  std::vector<double> b(o.x.begin() + hs.dim(), o.x.end());
  ev.orthonormalize(a.data(), b.data());
  res.coeff_a = std::move(a);
  res.coeff_b = std::move(b);
  return res;
}

}  // namespace qpc
