#pragma once

#include <string>
#include <vector>

#include "qpc/exact/trig_ring.hpp"

namespace qpc {

/// One step of a replayed proof: a named check that either verified its
/// computational content exactly or did not.
struct BranchCheck {
  std::string name;
  bool ok = false;
  std::string note;
};

struct ReplayResult {
  bool proved = false;
  std::vector<BranchCheck> branches;

  void add(std::string name, bool ok, std::string note = "") {
    branches.push_back({std::move(name), ok, std::move(note)});
  }
  void finish() {
    proved = !branches.empty();
    for (const auto& b : branches) proved = proved && b.ok;
  }
};

/// Is x provably nonzero on the admissible parameter domain?  Concrete
/// exact scalars: nonzero as a number.  The symbolic trig ring: nonzero
/// everywhere on the circle minus the axes (cos != 0, sin != 0).
template <class F>
bool nonzero_certain(const F& x) {
  return !is_zero(x);
}
inline bool nonzero_certain(const TrigElem& x) { return classify(x) == TrigSign::kNonzeroOffAxes; }

}  // namespace qpc
