#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpc/exact/rational.hpp"

namespace qpc {

/// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)), D a
/// positive non-square integer.  Field operations are exact.
template <int D>
struct Quad {
  static_assert(D > 1, "need a non-square radicand");
  Rat a{0}, b{0};

  Quad() = default;
  Quad(long v) : a(v) {}  // NOLINT(google-explicit-constructor)
  Quad(Rat v) : a(std::move(v)) {}
  Quad(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

  static Quad sqrt_d() { return Quad(Rat(0), Rat(1)); }

  Quad operator-() const { return Quad(-a, -b); }
  Quad& operator+=(const Quad& o) { a += o.a; b += o.b; return *this; }
  Quad& operator-=(const Quad& o) { a -= o.a; b -= o.b; return *this; }
  Quad& operator*=(const Quad& o) {
    Rat na = a * o.a + Rat(D) * b * o.b;
    Rat nb = a * o.b + b * o.a;
    a = na; b = nb;
    return *this;
  }
  friend Quad operator+(Quad x, const Quad& y) { return x += y; }
  friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
  friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
  friend Quad operator/(const Quad& x, const Quad& y) {
    Rat n = y.a * y.a - Rat(D) * y.b * y.b;  // field norm of the conjugate pair
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(sqrt(D))");
    Quad z = x * Quad(y.a, -y.b);
    return Quad(z.a / n, z.b / n);
  }
  Quad& operator/=(const Quad& y) { return *this = *this / y; }
  friend bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
};

template <int D>
inline bool is_zero(const Quad<D>& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }

template <int D>
inline double to_double(const Quad<D>& x) {
  return x.a.get_d() + x.b.get_d() * std::sqrt(double(D));
}

template <int D>
inline std::string to_string(const Quad<D>& x) {
  return x.a.get_str() + (sgn(x.b) >= 0 ? "+" : "") + x.b.get_str() + "*sqrt(" + std::to_string(D) + ")";
}

using Quad2 = Quad<2>;
using Quad3 = Quad<3>;

/// 1/sqrt(2) = sqrt(2)/2, the entry appearing in the distinguished points.
inline Quad2 inv_sqrt2() { return Quad2(Rat(0), rat(1, 2)); }

}  // namespace qpc
