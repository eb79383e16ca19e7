#ifndef TORIMULT_CONE_HPP
#define TORIMULT_CONE_HPP

#include "torimult/lattice.hpp"

#include <algorithm>
#include <vector>

namespace torimult {

/// Rational polyhedral cone given by primitive generators, with facet normals
/// in the dual lattice computed on demand. The library only ever builds cones
/// inside a fixed pointed ambient cone, so generators span a pointed cone
/// whenever `assert_pointed` is requested.
template <Lattice L>
class Cone {
public:
  static constexpr Lattice Dual = dual_lattice(L);

  Cone() = default;
  explicit Cone(std::vector<Vec<L>> gens, size_t ambient_dim);

  size_t ambient_dim() const { return dim_; }
  /// Dimension of the linear span.
  size_t rank() const { return rank_; }
  const std::vector<Vec<L>>& generators() const { return gens_; }

  bool is_pointed() const;
  bool is_simplicial() const { return rank_ == gens_.size(); }
  bool is_full_dimensional() const { return rank_ == dim_; }

  /// Facet normals (primitive, inward). For full-dimensional pointed cones
  /// these generate the dual cone. Lower-dimensional cones additionally carry
  /// +/- span equations folded in as normals.
  const std::vector<Vec<Dual>>& facet_normals() const;

  bool contains(const Vec<L>& v) const;
  /// v lies in the relative interior (strictly inside every facet).
  bool contains_in_relint(const Vec<L>& v) const;

  /// Smallest face containing v (as the sub-list of generators lying on every
  /// facet that is tight at v). Requires contains(v).
  std::vector<Vec<L>> face_through(const Vec<L>& v) const;

  friend bool operator==(const Cone& a, const Cone& b) { return a.gens_ == b.gens_; }
  friend bool operator<(const Cone& a, const Cone& b) { return a.gens_ < b.gens_; }

private:
  size_t dim_ = 0;
  size_t rank_ = 0;
  std::vector<Vec<L>> gens_;                    // primitive, lex-sorted, irredundant
  mutable std::vector<Vec<Dual>> normals_;      // lazy
  mutable bool normals_ready_ = false;
};

using NCone = Cone<Lattice::N>;
using MCone = Cone<Lattice::M>;

/// Dual cone {u : <u,w> >= 0 for all w in c} with primitive extreme-ray
/// generators. Involution on pointed full-dimensional cones. NON_POINTED if
/// the dual would not be pointed (i.e. c is not full-dimensional) and
/// vice versa.
template <Lattice L>
Cone<dual_lattice(L)> dualize(const Cone<L>& c);

/// Unique minimal generating set of the semigroup cone /\ lattice under
/// addition, lex-sorted. NON_POINTED on cones containing a line.
template <Lattice L>
std::vector<Vec<L>> hilbert_basis(const Cone<L>& c);

/// Index of the sublattice spanned by the generators of a simplicial cone
/// inside the lattice of its span; 1 iff unimodular. NON_SIMPLICIAL otherwise.
template <Lattice L>
Int cone_multiplicity(const Cone<L>& c);

/// Pulling triangulation into simplicial generator subsets, no new rays. The
/// apex rule is intrinsic to each face (lex-least generator), so applying this
/// conewise over a fan keeps shared faces consistent.
template <Lattice L>
std::vector<std::vector<Vec<L>>> triangulate(const Cone<L>& c);

} // namespace torimult

#endif
