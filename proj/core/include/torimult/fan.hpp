#ifndef TORIMULT_FAN_HPP
#define TORIMULT_FAN_HPP

#include "torimult/polyhedron.hpp"

#include <vector>

namespace torimult {

/// Affine normal toric variety X = X(sigma) for a pointed full-dimensional
/// cone sigma in N. The ray order (lex on primitive generators) is the fixed
/// order every divisor coefficient vector aligns to.
class AffineToricVariety {
public:
  AffineToricVariety() = default;
  explicit AffineToricVariety(NCone sigma);

  size_t rank() const { return sigma_.ambient_dim(); }
  const NCone& sigma() const { return sigma_; }
  const std::vector<NVec>& rays() const { return sigma_.generators(); }
  const MCone& sigma_dual() const { return dual_; }

  bool is_smooth() const;

private:
  NCone sigma_;
  MCone dual_;
};

/// Subdivision of sigma giving a proper birational toric morphism Y -> X.
/// Rays are stored base-first, exceptional rays lex-sorted after, and maximal
/// cones as sorted ray-index lists.
class FanRefinement {
public:
  FanRefinement() = default;
  /// Builds a fan over the base from explicit maximal cones (each
  /// full-dimensional, pairwise intersecting in faces, union = sigma; the
  /// constructor trusts this and only normalizes representation).
  FanRefinement(AffineToricVariety base, std::vector<NCone> maximal_cones);

  /// The trivial refinement {sigma}.
  static FanRefinement identity(const AffineToricVariety& X);

  const AffineToricVariety& base() const { return base_; }
  size_t rank() const { return base_.rank(); }
  const std::vector<NVec>& rays() const { return rays_; }
  size_t ray_count() const { return rays_.size(); }
  /// Indices of rays that are not base rays.
  const std::vector<size_t>& exceptional_rays() const { return exceptional_; }
  const std::vector<std::vector<size_t>>& max_cones() const { return cones_; }

  NCone cone(size_t i) const;
  size_t ray_index(const NVec& r) const; // throws if absent

  bool is_smooth() const;
  bool is_simplicial() const;

  /// Smallest cone of the fan whose relative interior contains w, as its
  /// generator list. OUTSIDE_SUPPORT if w is not in sigma.
  std::vector<NVec> smallest_cone_containing(const NVec& w) const;

  /// Rays of all maximal cones containing w (the star); the local sections of
  /// a divisor on Y near the center of w are cut out by exactly these rays.
  std::vector<size_t> star_ray_indices(const NVec& w) const;

  /// Every maximal cone of *this is contained in a maximal cone of other.
  bool refines(const FanRefinement& other) const;

  /// Stellar subdivision at a primitive b in |sigma| (new or existing ray).
  FanRefinement stellar_subdivision(const NVec& b) const;

  /// Conewise pulling triangulation (no new rays, consistent across faces).
  FanRefinement triangulated() const;

private:
  AffineToricVariety base_;
  std::vector<NVec> rays_;
  std::vector<size_t> exceptional_;
  std::vector<std::vector<size_t>> cones_;

  void normalize(std::vector<NCone> maximal);
};

/// Pairwise intersection refinement; BASE_MISMATCH if the bases differ.
FanRefinement common_refinement(const std::vector<FanRefinement>& fans);

/// Coarsest subdivision of sigma on whose cones w -> lp_min(poly, w) is
/// linear (regions of optimality of the vertices). INFEASIBLE on empty input.
FanRefinement normal_fan_restricted(const HPolyhedron& poly, const AffineToricVariety& X);

/// Subdivision of sigma on whose cones w -> min_g <g, w> is linear; the
/// domains where a single generator computes the valuation of the module.
FanRefinement generator_min_fan(const std::vector<MVec>& gens, const AffineToricVariety& X);

enum class PivotPolicy { LexLeast, LexGreatest };

/// Smooth refinement by iterated stellar subdivision at Hilbert-basis points
/// of maximal-multiplicity cones; deterministic per policy, terminates by
/// strict multiplicity descent.
FanRefinement resolve(const FanRefinement& fan, PivotPolicy policy = PivotPolicy::LexLeast);

/// Smooth refinement making every listed ideal (generator list) and every
/// polyhedron's lattice module locally principal conewise.
FanRefinement log_resolution(const AffineToricVariety& X,
                             const std::vector<std::vector<MVec>>& ideal_gens,
                             const std::vector<HPolyhedron>& polys,
                             PivotPolicy policy = PivotPolicy::LexLeast);

/// True when on every maximal cone some single generator attains min <g, w>
/// simultaneously at all rays of the cone.
bool locally_principal_on(const FanRefinement& fan, const std::vector<MVec>& gens);

/// The center of the valuation at w on the fan: the smallest cone whose
/// relative interior contains w (its orbit closure is c_X). OUTSIDE_SUPPORT
/// if w is not in sigma.
NCone center(const NVec& w, const FanRefinement& fan);

} // namespace torimult

#endif
