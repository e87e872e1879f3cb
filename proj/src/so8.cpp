#include "qpc/cayley/so8.hpp"

#include <sstream>

#include "json.hpp"
#include "qpc/config.hpp"

namespace qpc {

bool is_derivation(const Mat<double>& d7, double tol) {
  if (d7.rows() != 7 || d7.cols() != 7) throw std::invalid_argument("expected a 7x7 matrix");
  auto apply = [&](const Octonion<double>& o) {
    Octonion<double> r;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) r.c[i + 1] += d7.at(i, j) * o.c[j + 1];
    return r;
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Octonion<double> u = Octonion<double>::unit(i), v = Octonion<double>::unit(j);
      Octonion<double> lhs = apply(oct_mul(u, v));
      Octonion<double> rhs = oct_mul(apply(u), v) + oct_mul(u, apply(v));
      for (int k = 0; k < 8; ++k)
        if (std::abs(lhs.c[k] - rhs.c[k]) > tol) return false;
    }
  return true;
}

std::string g2_basis_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : g2_basis7<Rat>()) {
    nlohmann::json m = nlohmann::json::array();
    for (int i = 0; i < 7; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < 7; ++j) row.push_back((long)b.at(i, j).get_num().get_si());
      m.push_back(row);
    }
    arr.push_back(m);
  }
  return arr.dump();
}

}  // namespace qpc
