#pragma once

#include <array>
#include <string>
#include <vector>

namespace qpc {

enum class Family { s1_g2, so3_g2, eschenburg };

/// The acting subgroup U inside G x G: a circle with block weights times G2
/// on SO(8), its SO(3) x G2 enlargement, or the Eschenburg circle
/// (weights p left, (q1, q2, U(n-1)) right) on U(n+1).
struct BiquotientSpec {
  Family family = Family::s1_g2;
  std::vector<long> p;      // circle weights: 3 entries (s1_g2) or n+1 (eschenburg)
  std::array<long, 2> q{};  // eschenburg right weights

  static BiquotientSpec m13() { return {Family::s1_g2, {0, 0, 1}, {}}; }
  static BiquotientSpec n11() { return {Family::so3_g2, {}, {}}; }
  static BiquotientSpec eschenburg_spec(std::vector<long> pp, std::array<long, 2> qq) {
    return {Family::eschenburg, std::move(pp), qq};
  }
  int n() const { return family == Family::eschenburg ? int(p.size()) - 1 : 0; }
};

std::string family_name(Family f);
std::string to_json(const BiquotientSpec& s);
BiquotientSpec spec_from_json(const std::string& text);

}  // namespace qpc
