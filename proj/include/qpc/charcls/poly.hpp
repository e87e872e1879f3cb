#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpc {

using Int = mpz_class;

/// Variable sets for the Weyl-invariant computations.  Every variable has
/// cohomological degree 2.  The s-set is the quotient by s1+s2+s3 = 0,
/// stored canonically in (s1, s2) with s3 = -s1-s2 eliminated on entry.
enum class VarSet { t4, s2, u1, w1 };

int var_count(VarSet v);
std::string var_symbol(VarSet v, int idx);

/// Integer-coefficient polynomial in one variable set, exact arithmetic.
/// Monomial order: graded lexicographic (degree first, then lex), which
/// is also the deterministic print order.
class GradedPoly {
 public:
  using Expo = std::array<uint8_t, 4>;

  GradedPoly() : vars_(VarSet::u1) {}
  explicit GradedPoly(VarSet v) : vars_(v) {}

  static GradedPoly constant(VarSet v, Int c);
  /// idx-th generator; for the s-set idx 2 yields -s1-s2.
  static GradedPoly var(VarSet v, int idx);

  VarSet vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  /// top cohomological degree (2 * total exponent); zero polynomial: -1
  int degree() const;
  bool homogeneous() const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }
  GradedPoly& operator*=(const Int& c);
  GradedPoly pow(int k) const;
  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// ring homomorphism: substitute images[i] for variable i (all images in
  /// one common target set)
  GradedPoly substitute(VarSet target, const std::vector<GradedPoly>& images) const;

  /// coefficients reduced mod a prime p >= 3 (representatives in [0, p))
  GradedPoly reduced_mod(long prime) const;

  /// coefficient of the monomial with the given exponents
  Int coefficient(const Expo& e) const;

  std::string str() const;

  const std::map<Expo, Int>& terms() const { return terms_; }

 private:
  void insert(const Expo& e, const Int& c);
  VarSet vars_;
  std::map<Expo, Int> terms_;  // keyed by exponents; values nonzero
};

/// k-th elementary symmetric polynomial of the given values (1 <= k <= #values).
GradedPoly elementary_symmetric(int k, const std::vector<GradedPoly>& values);
Int elementary_symmetric(int k, const std::vector<Int>& values);

/// sigma_1(q^2), ..., convenience for integer weight vectors
Int sigma_of_squares(int k, const std::vector<long>& q);

}  // namespace qpc
