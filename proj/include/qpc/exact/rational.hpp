#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qpc {

/// Exact arbitrary-precision rational scalar.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline double to_double(const Rat& x) { return x.get_d(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace qpc
