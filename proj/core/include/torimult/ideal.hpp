#ifndef TORIMULT_IDEAL_HPP
#define TORIMULT_IDEAL_HPP

#include "torimult/fan.hpp"

namespace torimult {

/// Monomial fractional ideal: the module over sigma-dual /\ M generated by
/// finitely many exponents (arbitrary sign). Normal form = minimal generators,
/// lex-sorted.
class MonomialFractionalIdeal {
public:
  MonomialFractionalIdeal() = default;
  MonomialFractionalIdeal(std::vector<MVec> gens, const AffineToricVariety& X);

  static MonomialFractionalIdeal unit(const AffineToricVariety& X);
  /// The ideal of the torus-fixed point: all nonzero Hilbert basis elements
  /// of sigma-dual.
  static MonomialFractionalIdeal maximal_ideal(const AffineToricVariety& X);

  const std::vector<MVec>& gens() const { return gens_; }
  size_t dim() const { return dim_; }
  bool is_unit() const;
  /// All generators in sigma-dual (an honest ideal after reflexive closure of
  /// sign conventions).
  bool is_integral(const AffineToricVariety& X) const;

  /// u lies in the module.
  bool contains(const MVec& u, const AffineToricVariety& X) const;
  bool contains_ideal(const MonomialFractionalIdeal& other, const AffineToricVariety& X) const;

  /// min over generators of <g, w>.
  Int val(const NVec& w) const;

  friend bool operator==(const MonomialFractionalIdeal& a, const MonomialFractionalIdeal& b) {
    return a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialFractionalIdeal& a, const MonomialFractionalIdeal& b) {
    return !(a == b);
  }

private:
  std::vector<MVec> gens_;
  size_t dim_ = 0;
};

/// Module product (generated by pairwise sums of generators).
MonomialFractionalIdeal product(const MonomialFractionalIdeal& a, const MonomialFractionalIdeal& b,
                                const AffineToricVariety& X);
/// a^k by repeated products.
MonomialFractionalIdeal power(const MonomialFractionalIdeal& a, const Int& k,
                              const AffineToricVariety& X);
/// Module sum (union of generators).
MonomialFractionalIdeal sum(const MonomialFractionalIdeal& a, const MonomialFractionalIdeal& b,
                            const AffineToricVariety& X);
/// Translate by a single exponent.
MonomialFractionalIdeal shift(const MonomialFractionalIdeal& a, const MVec& u,
                              const AffineToricVariety& X);

} // namespace torimult

#endif
