#pragma once

#include <string>
#include <type_traits>

#include "qpc/exact/quadratic.hpp"
#include "qpc/exact/rational.hpp"

namespace qpc {

/// Complex number over an exact real scalar F.
template <class F>
struct Cx {
  F re{0}, im{0};

  Cx() = default;
  Cx(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  Cx(F r) : re(std::move(r)) {}
  Cx(F r, F i) : re(std::move(r)), im(std::move(i)) {}

  static Cx i() { return Cx(F(0), F(1)); }

  Cx operator-() const { return Cx(-re, -im); }
  Cx conj() const { return Cx(re, -im); }
  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  Cx& operator*=(const Cx& o) {
    F nr = re * o.re - im * o.im;
    F ni = re * o.im + im * o.re;
    re = nr; im = ni;
    return *this;
  }
  friend Cx operator+(Cx x, const Cx& y) { return x += y; }
  friend Cx operator-(Cx x, const Cx& y) { return x -= y; }
  friend Cx operator*(Cx x, const Cx& y) { return x *= y; }
  friend Cx operator/(const Cx& x, const Cx& y) {
    F n = y.re * y.re + y.im * y.im;
    Cx z = x * y.conj();
    return Cx(z.re / n, z.im / n);
  }
  friend bool operator==(const Cx& x, const Cx& y) { return x.re == y.re && x.im == y.im; }
  friend bool operator!=(const Cx& x, const Cx& y) { return !(x == y); }
};

template <class F>
inline bool is_zero(const Cx<F>& x) { return is_zero(x.re) && is_zero(x.im); }

template <class F>
inline std::string to_string(const Cx<F>& x) {
  return to_string(x.re) + " + i*(" + to_string(x.im) + ")";
}

// ---- uniform scalar access used by the templated linear algebra ----

template <class F> struct is_complex_scalar : std::false_type {};
template <class F> struct is_complex_scalar<Cx<F>> : std::true_type {};

/// conjugate (identity for real scalars)
template <class F> inline F conj_of(const F& x) { return x; }
template <class F> inline Cx<F> conj_of(const Cx<F>& x) { return x.conj(); }

/// real part (identity for real scalars)
template <class F> inline F re_of(const F& x) { return x; }
template <class F> inline F re_of(const Cx<F>& x) { return x.re; }

inline bool is_zero(double x) { return x == 0.0; }
inline double to_double(double x) { return x; }

/// Build the rational n/d in any scalar of the library.
template <class F>
F from_rat(long n, long d = 1) {
  Rat q(n, d);
  q.canonicalize();
  return F(q);
}
template <>
inline double from_rat<double>(long n, long d) {
  return double(n) / double(d);
}

template <class F>
inline double to_double(const Cx<F>& x) = delete;  // take re/im explicitly

}  // namespace qpc
