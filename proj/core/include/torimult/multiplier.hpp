#ifndef TORIMULT_MULTIPLIER_HPP
#define TORIMULT_MULTIPLIER_HPP

#include "torimult/cancel.hpp"
#include "torimult/divisor.hpp"

#include <optional>
#include <variant>

namespace torimult {

/// One term of Z = sum coeff_k . Z_k; bodies are monomial ideals or
/// torus-invariant divisors. Divisor bodies are valuated as their modules
/// O_X(-D) (scheme-theoretic convention) except where an operation
/// explicitly asks for Q-Cartier pullback semantics.
struct PairTerm {
  Rat coeff;
  std::variant<MonomialFractionalIdeal, TWeilDivisor> body;
};

struct PairSpec {
  AffineToricVariety X;
  std::vector<PairTerm> terms;

  PairSpec(AffineToricVariety X_, std::vector<PairTerm> terms_);
  static PairSpec trivial(const AffineToricVariety& X) { return PairSpec(X, {}); }
  /// The same pair with every coefficient scaled by t.
  PairSpec scaled(const Rat& t) const;
  bool is_zero() const;
};

/// Terms with divisor bodies replaced by O_X(-D) minimal generators.
std::vector<std::pair<Rat, MonomialFractionalIdeal>> ideal_terms(const PairSpec& P);

/// Z(w) = sum coeff_k * val_w(I_k) over the ideal view.
Rat pair_valuation(const std::vector<std::pair<Rat, MonomialFractionalIdeal>>& terms, const NVec& w);

struct BoundarySpec {
  TWeilDivisor delta;
  QCartier cert; // of K_X + delta
};
BoundarySpec make_boundary(const AffineToricVariety& X, const TWeilDivisor& delta);

struct StabilizationCertificate {
  Int m_star;                  // lcm of all vertex denominators of P1
  std::vector<RatVec> p1_vertices;
};

/// m* and the vertices of P1 = {<u, v_i> >= -1}; at every multiple of m* the
/// limiting relative canonical equals K- on all of sigma.
StabilizationCertificate stabilization_certificate(const AffineToricVariety& X);

/// Working data of a stabilized computation: a log resolution of
/// (X, Z + O(-m* K_X)) with the K- coefficients and Z-values at its rays.
struct StabilizedPair {
  FanRefinement fan;
  StabilizationCertificate cert;
  std::vector<Rat> A; // K- coefficient per fan ray
  std::vector<Rat> Z; // pair valuation per fan ray
};
StabilizedPair stabilize(const PairSpec& P, PivotPolicy policy = PivotPolicy::LexLeast);

/// f_* O_Y(E) for integral E on the refinement: minimal generators of
/// {u : <u, w> >= -e_w over all rays w}.
MonomialFractionalIdeal pushforward_module(const FanRefinement& f, const TWeilDivisor& E);

/// J_m(X,Z) = f_* O_Y(ceil(K_{m,Y/X} - f^{-1}(Z))) on a log resolution of
/// (X, Z + O(-m K_X)).
MonomialFractionalIdeal mult_ideal_m(const PairSpec& P, const Int& m,
                                     PivotPolicy policy = PivotPolicy::LexLeast);

/// The multiplier ideal J(X,Z) = J_{m*}(X,Z) with its certificate.
std::pair<MonomialFractionalIdeal, StabilizationCertificate>
mult_ideal(const PairSpec& P, PivotPolicy policy = PivotPolicy::LexLeast);

/// J(X, tZ) on an already stabilized fan (valid for every t >= 0).
MonomialFractionalIdeal mult_ideal_at(const StabilizedPair& S, const Rat& t);

/// J((X,Delta); Z) for a boundary; always contained in J(X,Z).
/// NOT_QCARTIER / BAD_BOUNDARY on violated preconditions.
MonomialFractionalIdeal log_mult_ideal(const BoundarySpec& B, const PairSpec& P);
/// Same on an existing stabilization of P (the fan is already a log
/// resolution of everything the boundary computation needs).
MonomialFractionalIdeal log_mult_ideal_on(const BoundarySpec& B, const PairSpec& P,
                                          const StabilizedPair& S);

/// Common refinement of the normal fan of P1 = {<u, v_i> >= -1} and the
/// generator-min fans of every Z term; -lp(P1, .) and all term valuations are
/// linear on each of its cones.
FanRefinement pair_linearity_fan(const PairSpec& P);

/// Log canonical threshold; nullopt encodes +infinity (Z valuatively
/// trivial). NOT_LOG_TERMINAL when X itself is not log terminal.
std::optional<Rat> lct(const PairSpec& P);

/// All jumping numbers in (0, t_max].
std::vector<Rat> jumping_numbers(const PairSpec& P, const Rat& t_max);

/// Asymptotic multiplier ideal J(X, c||D||) for integral D.
MonomialFractionalIdeal asymptotic_mult_ideal(const AffineToricVariety& X, const TWeilDivisor& D,
                                              const Rat& c);

/// adj_H(X, Z) along a reduced effective Cartier H; NOT_CARTIER /
/// SHARED_COMPONENT on violated preconditions.
MonomialFractionalIdeal adjoint_ideal(const PairSpec& P, const TWeilDivisor& H);

/// Searches effective torus-invariant Delta with m*Delta integral,
/// floor(Delta) = 0, K_X+Delta Q-Cartier, no component shared with Z, and
/// K^Delta = K_m on the working resolution. First hit in lex order of
/// numerator vectors; numerators are capped at denominator_bound. NOT_FOUND
/// (nullopt) is not a refutation.
std::optional<BoundarySpec> compatible_boundary_search(const PairSpec& P, const Int& m,
                                                       const Int& denominator_bound,
                                                       const CancelToken& cancel = CancelToken::none());

} // namespace torimult

#endif
