#ifndef TORIMULT_LP_HPP
#define TORIMULT_LP_HPP

#include "torimult/lattice.hpp"

#include <vector>

namespace torimult {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct SimplexResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  std::vector<Rat> x;
};

/// Exact-arithmetic primal simplex with Bland's rule on the standard form
///   min c.x  s.t.  A x = b, x >= 0.
/// Two phases; no cycling by Bland. Sizes here are tiny, no effort is spent
/// on sparsity or revised updates.
SimplexResult simplex_solve(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                            const std::vector<Rat>& c);

} // namespace torimult

#endif
