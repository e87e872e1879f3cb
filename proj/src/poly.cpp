#include "qpc/charcls/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qpc {

int var_count(VarSet v) {
  switch (v) {
    case VarSet::t4: return 4;
    case VarSet::s2: return 2;
    case VarSet::u1:
    case VarSet::w1: return 1;
  }
  return 0;
}

std::string var_symbol(VarSet v, int idx) {
  switch (v) {
    case VarSet::t4: return "t" + std::to_string(idx + 1);
    case VarSet::s2: return "s" + std::to_string(idx + 1);
    case VarSet::u1: return "u";
    case VarSet::w1: return "w";
  }
  return "?";
}

GradedPoly GradedPoly::constant(VarSet v, Int c) {
  GradedPoly p(v);
  if (c != 0) p.terms_[{0, 0, 0, 0}] = std::move(c);
  return p;
}

GradedPoly GradedPoly::var(VarSet v, int idx) {
  GradedPoly p(v);
  int nv = var_count(v);
  if (v == VarSet::s2 && idx == 2) {  // s3 = -s1 - s2
    p.terms_[{1, 0, 0, 0}] = -1;
    p.terms_[{0, 1, 0, 0}] = -1;
    return p;
  }
  if (idx < 0 || idx >= nv) throw std::out_of_range("variable index");
  Expo e{0, 0, 0, 0};
  e[idx] = 1;
  p.terms_[e] = 1;
  return p;
}

int GradedPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, 2 * (e[0] + e[1] + e[2] + e[3]));
  return d;
}

bool GradedPoly::homogeneous() const {
  int d = -2;
  for (const auto& [e, c] : terms_) {
    int t = e[0] + e[1] + e[2] + e[3];
    if (d == -2) d = t;
    else if (d != t) return false;
  }
  return true;
}

void GradedPoly::insert(const Expo& e, const Int& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly p(vars_);
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  if (vars_ != o.vars_) throw std::invalid_argument("mixed variable sets");
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  if (vars_ != o.vars_) throw std::invalid_argument("mixed variable sets");
  for (const auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("mixed variable sets");
  GradedPoly p(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      GradedPoly::Expo e{};
      for (int i = 0; i < 4; ++i) {
        int s = ea[i] + eb[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        e[i] = uint8_t(s);
      }
      p.insert(e, ca * cb);
    }
  return p;
}

GradedPoly& GradedPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

GradedPoly GradedPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  GradedPoly r = constant(vars_, 1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

GradedPoly GradedPoly::substitute(VarSet target, const std::vector<GradedPoly>& images) const {
  if (int(images.size()) != var_count(vars_))
    throw std::invalid_argument("need one image per variable");
  for (const auto& im : images)
    if (im.vars() != target) throw std::invalid_argument("images live in the wrong set");
  GradedPoly out(target);
  for (const auto& [e, c] : terms_) {
    GradedPoly term = constant(target, c);
    for (int i = 0; i < var_count(vars_); ++i)
      for (int k = 0; k < e[i]; ++k) term *= images[i];
    out += term;
  }
  return out;
}

GradedPoly GradedPoly::reduced_mod(long prime) const {
  if (prime < 3) throw std::invalid_argument("modulus must be a prime >= 3");
  GradedPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Int r = c % prime;
    if (r < 0) r += prime;
    if (r != 0) out.terms_[e] = r;
  }
  return out;
}

Int GradedPoly::coefficient(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  // graded lexicographic, highest degree first
  std::vector<std::pair<Expo, Int>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1] + a.first[2] + a.first[3];
    int db = b.first[0] + b.first[1] + b.first[2] + b.first[3];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : items) {
    Int a = c < 0 ? Int(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool any_var = e[0] || e[1] || e[2] || e[3];
    if (a != 1 || !any_var) os << a.get_str();
    bool star = a != 1 && any_var;
    for (int i = 0; i < 4; ++i) {
      if (!e[i]) continue;
      if (star) os << "*";
      os << var_symbol(vars_, i);
      if (e[i] > 1) os << "^" << int(e[i]);
      star = true;
    }
  }
  return os.str();
}

GradedPoly elementary_symmetric(int k, const std::vector<GradedPoly>& values) {
  if (values.empty()) throw std::invalid_argument("no values");
  if (k < 1 || k > int(values.size())) throw std::out_of_range("sigma_k needs 1 <= k <= #values");
  VarSet v = values[0].vars();
  // dp[j] = sigma_j of the prefix; descending update so each value enters once
  std::vector<GradedPoly> dp(size_t(k) + 1, GradedPoly(v));
  dp[0] = GradedPoly::constant(v, 1);
  for (const auto& x : values)
    for (int j = k; j >= 1; --j) dp[j] += dp[j - 1] * x;
  return dp[k];
}

Int elementary_symmetric(int k, const std::vector<Int>& values) {
  if (values.empty()) throw std::invalid_argument("no values");
  if (k < 1 || k > int(values.size())) throw std::out_of_range("sigma_k needs 1 <= k <= #values");
  std::vector<Int> dp(size_t(k) + 1, Int(0));
  dp[0] = 1;
  for (const auto& x : values)
    for (int j = k; j >= 1; --j) dp[j] += dp[j - 1] * x;
  return dp[k];
}

Int sigma_of_squares(int k, const std::vector<long>& q) {
  std::vector<Int> sq;
  for (long v : q) sq.push_back(Int(v) * Int(v));
  return elementary_symmetric(k, sq);
}

}  // namespace qpc
