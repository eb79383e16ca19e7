#ifndef TORIMULT_DIVISOR_HPP
#define TORIMULT_DIVISOR_HPP

#include "torimult/fan.hpp"
#include "torimult/ideal.hpp"

namespace torimult {

/// Torus-invariant Weil Q-divisor: one rational coefficient per ray, aligned
/// to the ray order of the variety or fan it lives on.
struct TWeilDivisor {
  std::vector<Rat> c;

  TWeilDivisor() = default;
  explicit TWeilDivisor(size_t nrays) : c(nrays) {}
  explicit TWeilDivisor(std::vector<Rat> cs) : c(std::move(cs)) {}

  size_t size() const { return c.size(); }
  bool is_integral() const {
    for (const auto& x : c)
      if (!x.is_integer()) return false;
    return true;
  }
  bool is_effective() const {
    for (const auto& x : c)
      if (x.sign() < 0) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  friend TWeilDivisor operator+(const TWeilDivisor& a, const TWeilDivisor& b) {
    TWeilDivisor r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend TWeilDivisor operator-(const TWeilDivisor& a, const TWeilDivisor& b) {
    TWeilDivisor r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend TWeilDivisor operator*(const Rat& t, const TWeilDivisor& a) {
    TWeilDivisor r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.c[i] = t * a.c[i];
    return r;
  }
  friend bool operator==(const TWeilDivisor& a, const TWeilDivisor& b) { return a.c == b.c; }
  /// a <= b coefficientwise.
  friend bool leq(const TWeilDivisor& a, const TWeilDivisor& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a.c[i] > b.c[i]) return false;
    return true;
  }
};

/// q * val_F for the prime divisor F over X attached to the primitive w in
/// sigma /\ N; the center is the orbit closure of the smallest cone whose
/// relative interior contains w.
struct DivisorialValuation {
  NVec w;
  Int q = 1;
};

/// Section module O_X(-D) <-> {u : <u, v_i> >= d_i}; its lattice points are
/// the monomials of O_X(-D).
HPolyhedron section_polyhedron(const AffineToricVariety& X, const TWeilDivisor& D);

/// v(I): q times the minimum pairing of a generator against w.
Rat val_ideal(const DivisorialValuation& v, const MonomialFractionalIdeal& I);

/// Natural valuation of an integral divisor: q * ilp over the section
/// polyhedron. NON_INTEGRAL_DIVISOR when D has fractional coefficients.
Rat nat_val(const AffineToricVariety& X, const DivisorialValuation& v, const TWeilDivisor& D);

/// Limiting valuation of a Q-divisor: q * lp over the section polyhedron,
/// equal to lim v_nat(k! D)/k! by the scaling identity.
Rat limit_val(const AffineToricVariety& X, const DivisorialValuation& v, const TWeilDivisor& D);

/// divisor(I): coefficient at each ray = min generator pairing.
TWeilDivisor divisorial_part(const AffineToricVariety& X, const MonomialFractionalIdeal& I);

/// I^vv as minimal generators of the section polyhedron of its divisorial
/// part; contains I, idempotent.
MonomialFractionalIdeal reflexive_hull(const AffineToricVariety& X, const MonomialFractionalIdeal& I);

/// f-natural pullback: one ilp per ray of the refinement.
TWeilDivisor nat_pullback(const FanRefinement& f, const TWeilDivisor& D);

/// f* pullback: one lp per ray of the refinement.
TWeilDivisor pullback(const FanRefinement& f, const TWeilDivisor& D);

/// Canonical divisor: every ray coefficient -1 (pushforward recovers the
/// base's choice).
TWeilDivisor canonical_divisor(const AffineToricVariety& X);
TWeilDivisor canonical_divisor(const FanRefinement& f);

/// Restriction of a divisor on f to the base rays (f_* for cycles).
TWeilDivisor pushforward_divisor(const FanRefinement& f, const TWeilDivisor& D_on_f);

/// Proper transform on f of a divisor on the base: same coefficients at base
/// rays, zero at exceptional rays.
TWeilDivisor proper_transform(const FanRefinement& f, const TWeilDivisor& D);

/// K_{m,Y/X} = K_Y - (1/m) f-natural(m K_X).
TWeilDivisor limiting_relcan(const FanRefinement& f, const Int& m);

/// K_{Y/X} = K_Y + f*(-K_X).
TWeilDivisor relcan(const FanRefinement& f);

/// K-_{Y/X} = K_Y - f*(K_X).
TWeilDivisor relcan_minus(const FanRefinement& f);

struct QCartier {
  bool yes = false;
  Int index = 0;    // least m with m*slope integral
  RatVec slope;     // <slope, v_i> = d_i
};
/// Detects <u, v_i> = d_i solvability over Q.
QCartier is_qcartier(const AffineToricVariety& X, const TWeilDivisor& D);

/// K^Delta_{Y/X} = K_Y + Delta_Y - f*(K_X + Delta); NOT_QCARTIER when
/// K_X + Delta is not Q-Cartier, BAD_BOUNDARY when Delta is not effective.
TWeilDivisor log_relcan(const FanRefinement& f, const TWeilDivisor& delta);

// -- star-local (relative) calculus over an intermediate fan Y --
// Sections of a divisor on Y near the center of w are cut out by the rays of
// the star of w, so valuations over Y are local integer/linear programs.

Rat nat_val_on_fan(const FanRefinement& Y, const NVec& w, const TWeilDivisor& D_on_Y);
Rat limit_val_on_fan(const FanRefinement& Y, const NVec& w, const TWeilDivisor& D_on_Y);

/// g-natural / g* pullback along g : V -> Y of a divisor living on Y, where V
/// refines Y (both refinements of the same base).
TWeilDivisor nat_pullback_rel(const FanRefinement& V, const FanRefinement& Y,
                              const TWeilDivisor& D_on_Y);
TWeilDivisor pullback_rel(const FanRefinement& V, const FanRefinement& Y,
                          const TWeilDivisor& D_on_Y);

/// K_{m,V/Y} for the (possibly non-affine) intermediate Y.
TWeilDivisor limiting_relcan_rel(const FanRefinement& V, const FanRefinement& Y, const Int& m);

} // namespace torimult

#endif
