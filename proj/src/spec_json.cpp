#include <stdexcept>

#include "json.hpp"
#include "qpc/actions/spec.hpp"

namespace qpc {

std::string family_name(Family f) {
  switch (f) {
    case Family::s1_g2: return "s1xg2";
    case Family::so3_g2: return "so3xg2";
    case Family::eschenburg: return "eschenburg";
  }
  return "?";
}

std::string to_json(const BiquotientSpec& s) {
  nlohmann::json j;
  j["family"] = family_name(s.family);
  j["p"] = s.p;
  j["q"] = std::vector<long>(s.q.begin(), s.q.end());
  return j.dump();
}

BiquotientSpec spec_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  BiquotientSpec s;
  std::string fam = j.at("family");
  if (fam == "s1xg2") s.family = Family::s1_g2;
  else if (fam == "so3xg2") s.family = Family::so3_g2;
  else if (fam == "eschenburg") s.family = Family::eschenburg;
  else throw std::invalid_argument("unknown family: " + fam);
  s.p = j.value("p", std::vector<long>{});
  auto q = j.value("q", std::vector<long>{});
  for (size_t i = 0; i < q.size() && i < 2; ++i) s.q[i] = q[i];
  return s;
}

}  // namespace qpc
