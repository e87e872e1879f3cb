#pragma once

#include <string>
#include <vector>

namespace qpc::kern {

/// One backend of the double-precision inner-loop kernels.  All matrix
/// arguments are dense row-major n x n buffers.  `mul` and `bracket` must
/// produce bit-identical results across backends (per-element accumulation
/// order is part of the contract); the reductions `frob2` and `dot` may
/// reassociate and are equivalence-tested to a tight tolerance instead.
struct Ops {
  const char* name;
  void (*mul)(const double* a, const double* b, double* c, int n);      // c = a*b, no aliasing
  void (*bracket)(const double* a, const double* b, double* c, int n);  // c = ab - ba
  double (*frob2)(const double* a, int len);                            // sum of squares
  double (*dot)(const double* a, const double* b, int len);
  void (*axpy)(double t, const double* x, double* y, int len);          // y += t*x
};

/// Backend in effect.  Chosen once at startup: QPC_KERNEL=scalar|avx2|neon
/// if set, otherwise the widest instruction set the CPU supports.
const Ops& ops();

const Ops& scalar_ops();

/// Every backend compiled in and usable on this machine.
std::vector<const Ops*> available_backends();

/// Force a backend by name; false if it is not available.
bool select(const std::string& name);

}  // namespace qpc::kern
