#include <array>
#include <stdexcept>

#include "qpc/cayley/octonion.hpp"

namespace qpc {
namespace {

std::array<std::array<BasisProduct, 8>, 8> build_table() {
  std::array<std::array<BasisProduct, 8>, 8> t{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Octonion<Rat> p = oct_mul(Octonion<Rat>::unit(i), Octonion<Rat>::unit(j));
      int idx = -1, sign = 0;
      for (int k = 0; k < 8; ++k) {
        if (is_zero(p.c[k])) continue;
        idx = k;
        sign = sgn(p.c[k]);
      }
      t[i][j] = BasisProduct{sign, idx};
    }
  }
  return t;
}

}  // namespace

BasisProduct oct_basis_product(int i, int j) {
  if (i < 0 || i > 7 || j < 0 || j > 7) throw std::out_of_range("basis index");
  static const auto table = build_table();
  return table[i][j];
}

}  // namespace qpc
