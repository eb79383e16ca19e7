#ifndef TORIMULT_POLYHEDRON_HPP
#define TORIMULT_POLYHEDRON_HPP

#include "torimult/cone.hpp"
#include "torimult/lp.hpp"

#include <vector>

namespace torimult {

/// Rational polyhedron {u in M_Q : <u, normal_i> >= rhs_i}. Section polyhedra
/// of divisors and all pushforward modules live here; the recession cone is
/// the dual cone of the constraint normals.
class HPolyhedron {
public:
  struct Constraint {
    NVec normal;
    Rat rhs;
  };

  HPolyhedron() = default;
  HPolyhedron(std::vector<Constraint> cs, size_t dim) : cs_(std::move(cs)), dim_(dim) {}

  size_t dim() const { return dim_; }
  const std::vector<Constraint>& constraints() const { return cs_; }

  bool contains(const RatVec& u) const;
  bool contains(const MVec& u) const;

  /// Dual of the constraint-normal cone, with generator representation.
  MCone recession_cone() const;

  bool is_empty() const;

  struct LpOutcome {
    LpStatus status;
    Rat value;
    RatVec witness;
  };
  /// Exact min of <u, objective> by two-phase simplex (Bland's rule).
  LpOutcome lp_min(const NVec& objective) const;

  /// All vertices (basic feasible points), lex-sorted. Empty when the
  /// polyhedron is empty (or has no vertex, which cannot happen for pointed
  /// recession cones).
  std::vector<RatVec> vertices() const;

  /// Lcm of the denominators of all vertex coordinates (1 for empty list).
  Int vertex_denominator_lcm() const;

  struct IlpOutcome {
    LpStatus status;
    Rat value; // integer-valued at Optimal
    MVec witness;
  };
  /// Exact min of <u, objective> over the lattice points. Requires the
  /// recession cone to be pointed and full-dimensional (true at every call
  /// site: recession is sigma-dual); the objective must be nonnegative on it,
  /// else UNBOUNDED. INFEASIBLE iff rationally empty.
  IlpOutcome ilp_min(const NVec& objective) const;
  /// Same, reusing precomputed minimal generators.
  static IlpOutcome ilp_min_over(const std::vector<MVec>& gens, const NVec& objective);

  /// Minimal G with (lattice points of *this) = union of g + (recession /\ M),
  /// lex-sorted. Requires pointed full-dimensional recession; INFEASIBLE if
  /// empty.
  std::vector<MVec> min_generators() const;

  /// Some lattice point (full-dimensional recession required; the rounding
  /// construction never fails on a nonempty polyhedron). INFEASIBLE if empty.
  MVec find_lattice_point() const;

  /// All lattice points with <u, weight> <= bound on top of the constraints,
  /// requiring that truncation to be bounded. Enumeration order deterministic.
  std::vector<MVec> lattice_points_truncated(const NVec& weight, const Rat& bound) const;

private:
  std::vector<Constraint> cs_;
  size_t dim_ = 0;
};

} // namespace torimult

#endif
