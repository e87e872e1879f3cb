#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpc/exact/rational.hpp"

namespace qpc {

namespace detail {
using Poly = std::vector<Rat>;  // dense coefficients, index = power of c

inline void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}
inline Poly padd(const Poly& x, const Poly& y, int sign = 1) {
  Poly r(std::max(x.size(), y.size()), Rat(0));
  for (size_t i = 0; i < x.size(); ++i) r[i] += x[i];
  for (size_t i = 0; i < y.size(); ++i) r[i] += Rat(sign) * y[i];
  trim(r);
  return r;
}
inline Poly pmul(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly r(x.size() + y.size() - 1, Rat(0));
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  trim(r);
  return r;
}
// quotient of x by (1 - c^2), exact; returns false when not divisible
inline bool pdiv_one_minus_c2(Poly x, Poly& out) {
  trim(x);
  Poly q;  // quotient by (c^2 - 1), negated at the end
  if (x.size() >= 3) q.resize(x.size() - 2, Rat(0));
  while (x.size() >= 3) {
    size_t k = x.size() - 1;
    Rat a = x.back();
    q[k - 2] += a;
    x[k] -= a;
    x[k - 2] += a;
    trim(x);
  }
  if (!x.empty()) return false;
  for (auto& coef : q) coef = -coef;
  trim(q);
  out = q;
  return true;
}
}  // namespace detail

/// Element of the ring Q[c, s] / (c^2 + s^2 - 1), written canonically as
/// P(c) + s*Q(c).  c and s stand for the cosine and sine of an unspecified
/// angle; arithmetic here proves statements uniformly in that angle.
struct TrigElem {
  detail::Poly p, q;  // value = p(c) + s * q(c)

  TrigElem() = default;
  TrigElem(long v) { if (v) p = {Rat(v)}; }  // NOLINT
  TrigElem(Rat v) { if (sgn(v) != 0) p = {std::move(v)}; }

  static TrigElem c() { return from(detail::Poly{Rat(0), Rat(1)}, {}); }
  static TrigElem s() { return from({}, detail::Poly{Rat(1)}); }
  static TrigElem from(detail::Poly pp, detail::Poly qq) {
    TrigElem e;
    e.p = std::move(pp); e.q = std::move(qq);
    detail::trim(e.p); detail::trim(e.q);
    return e;
  }

  TrigElem operator-() const {
    TrigElem r = *this;
    for (auto& x : r.p) x = -x;
    for (auto& x : r.q) x = -x;
    return r;
  }
  TrigElem& operator+=(const TrigElem& o) {
    p = detail::padd(p, o.p); q = detail::padd(q, o.q);
    return *this;
  }
  TrigElem& operator-=(const TrigElem& o) {
    p = detail::padd(p, o.p, -1); q = detail::padd(q, o.q, -1);
    return *this;
  }
  TrigElem& operator*=(const TrigElem& o) {
    // (p1 + s q1)(p2 + s q2) = p1 p2 + (1 - c^2) q1 q2 + s (p1 q2 + q1 p2)
    detail::Poly one_minus_c2{Rat(1), Rat(0), Rat(-1)};
    detail::Poly np = detail::padd(detail::pmul(p, o.p),
                                   detail::pmul(one_minus_c2, detail::pmul(q, o.q)));
    detail::Poly nq = detail::padd(detail::pmul(p, o.q), detail::pmul(q, o.p));
    p = std::move(np); q = std::move(nq);
    return *this;
  }
  friend TrigElem operator+(TrigElem x, const TrigElem& y) { return x += y; }
  friend TrigElem operator-(TrigElem x, const TrigElem& y) { return x -= y; }
  friend TrigElem operator*(TrigElem x, const TrigElem& y) { return x *= y; }
  friend bool operator==(const TrigElem& x, const TrigElem& y) {
    return x.p == y.p && x.q == y.q;
  }
  friend bool operator!=(const TrigElem& x, const TrigElem& y) { return !(x == y); }

  /// Evaluate at concrete (c0, s0); the caller guarantees c0^2 + s0^2 = 1.
  template <class F>
  F eval(const F& c0, const F& s0) const {
    F r{0}, cp{1};
    for (const auto& coef : p) { r += F(coef) * cp; cp *= c0; }
    F r2{0}; cp = F{1};
    for (const auto& coef : q) { r2 += F(coef) * cp; cp *= c0; }
    return r + s0 * r2;
  }
};

inline bool is_zero(const TrigElem& x) { return x.p.empty() && x.q.empty(); }

/// Outcome of asking whether an element can vanish somewhere on the circle
/// minus the four axis points (i.e. with c != 0 and s != 0).
enum class TrigSign { kZero, kNonzeroOffAxes, kUnknown };

/// Classify x on { (c,s) : c^2 + s^2 = 1, c*s != 0 }.  Strips factors of c
/// and s; a nonzero constant remainder certifies non-vanishing.  Anything
/// else is reported as unknown rather than guessed.
inline TrigSign classify(TrigElem x) {
  if (is_zero(x)) return TrigSign::kZero;
  // strip factors of c: possible when both polys have zero constant term
  auto divisible_by_c = [](const detail::Poly& p) {
    return p.empty() || sgn(p.front()) == 0;
  };
  auto shift_down = [](detail::Poly& p) {
    if (!p.empty()) p.erase(p.begin());
  };
  for (;;) {
    bool progressed = false;
    while (divisible_by_c(x.p) && divisible_by_c(x.q) && !(x.p.empty() && x.q.empty())) {
      shift_down(x.p); shift_down(x.q);
      progressed = true;
    }
    // strip a factor of s:  p + s q = s * (q' + s p')  needs (1-c^2) | p
    detail::Poly pdiv;
    if (!(x.p.empty() && x.q.empty()) && detail::pdiv_one_minus_c2(x.p, pdiv)) {
      detail::Poly np = x.q, nq = pdiv;
      x.p = std::move(np); x.q = std::move(nq);
      detail::trim(x.p); detail::trim(x.q);
      progressed = true;
    }
    if (!progressed) break;
  }
  if (x.q.empty() && x.p.size() == 1 && sgn(x.p[0]) != 0) return TrigSign::kNonzeroOffAxes;
  return TrigSign::kUnknown;
}

inline double to_double(const TrigElem&) {
  throw std::logic_error("TrigElem has no numeric value without an angle");
}

inline std::string to_string(const TrigElem& x) {
  std::string out;
  auto poly = [](const detail::Poly& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
      if (sgn(p[i]) == 0) continue;
      if (!s.empty()) s += "+";
      s += p[i].get_str();
      if (i == 1) s += "*c";
      if (i > 1) s += "*c^" + std::to_string(i);
    }
    return s.empty() ? std::string("0") : s;
  };
  out = poly(x.p);
  if (!x.q.empty()) out += " + s*(" + poly(x.q) + ")";
  return out;
}

}  // namespace qpc
