#ifndef TORIMULT_SRC_BOXENUM_HPP
#define TORIMULT_SRC_BOXENUM_HPP

#include "torimult/lattice.hpp"

#include <functional>

namespace torimult::detail {

/// Iterates all integer vectors x with lo[i] <= x[i] <= hi[i]. The visitor
/// returns false to abort the walk.
inline void for_each_in_box(const std::vector<Int>& lo, const std::vector<Int>& hi,
                            const std::function<bool(const std::vector<Int>&)>& visit) {
  size_t n = lo.size();
  for (size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  std::vector<Int> x = lo;
  while (true) {
    if (!visit(x)) return;
    size_t i = 0;
    while (i < n) {
      ++x[i];
      if (x[i] <= hi[i]) break;
      x[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

} // namespace torimult::detail

#endif
