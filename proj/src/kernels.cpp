#include "qpc/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qpc::kern {

#ifdef QPC_BUILD_AVX2
const Ops* avx2_ops_if_supported();
#endif
#ifdef QPC_BUILD_NEON
const Ops* neon_ops_if_supported();
#endif

namespace {

std::vector<const Ops*> compute_backends() {
  std::vector<const Ops*> v{&scalar_ops()};
#ifdef QPC_BUILD_AVX2
  if (const Ops* o = avx2_ops_if_supported()) v.push_back(o);
#endif
#ifdef QPC_BUILD_NEON
  if (const Ops* o = neon_ops_if_supported()) v.push_back(o);
#endif
  return v;
}

const Ops*& current() {
  static const Ops* cur = [] {
    const auto& backends = available_backends();
    const Ops* pick = backends.back();  // widest available
    if (const char* env = std::getenv("QPC_KERNEL")) {
      for (const Ops* o : backends)
        if (std::strcmp(o->name, env) == 0) pick = o;
    }
    return pick;
  }();
  return cur;
}

}  // namespace

std::vector<const Ops*> available_backends() {
  static const std::vector<const Ops*> v = compute_backends();
  return v;
}

const Ops& ops() { return *current(); }

bool select(const std::string& name) {
  for (const Ops* o : available_backends()) {
    if (name == o->name) {
      current() = o;
      return true;
    }
  }
  return false;
}

}  // namespace qpc::kern
