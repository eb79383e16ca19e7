#include "torimult/multiplier.hpp"

#include <algorithm>
#include <set>

namespace torimult {

PairSpec::PairSpec(AffineToricVariety X_, std::vector<PairTerm> terms_)
    : X(std::move(X_)), terms(std::move(terms_)) {
  for (const auto& t : terms)
    if (t.coeff.sign() < 0) throw Error("NOT_EFFECTIVE", "pair coefficients must be nonnegative");
}

PairSpec PairSpec::scaled(const Rat& t) const {
  PairSpec out = *this;
  for (auto& term : out.terms) term.coeff *= t;
  return out;
}

bool PairSpec::is_zero() const {
  for (const auto& t : terms)
    if (t.coeff.sign() > 0) return false;
  return true;
}

std::vector<std::pair<Rat, MonomialFractionalIdeal>> ideal_terms(const PairSpec& P) {
  std::vector<std::pair<Rat, MonomialFractionalIdeal>> out;
  for (const auto& t : P.terms) {
    if (t.coeff.is_zero()) continue;
    if (std::holds_alternative<MonomialFractionalIdeal>(t.body)) {
      out.emplace_back(t.coeff, std::get<MonomialFractionalIdeal>(t.body));
    } else {
      const auto& D = std::get<TWeilDivisor>(t.body);
      auto gens = section_polyhedron(P.X, D).min_generators();
      out.emplace_back(t.coeff, MonomialFractionalIdeal(gens, P.X));
    }
  }
  return out;
}

Rat pair_valuation(const std::vector<std::pair<Rat, MonomialFractionalIdeal>>& terms,
                   const NVec& w) {
  Rat z;
  for (const auto& [a, I] : terms) z += a * Rat(I.val(w));
  return z;
}

BoundarySpec make_boundary(const AffineToricVariety& X, const TWeilDivisor& delta) {
  if (!delta.is_effective()) throw Error("BAD_BOUNDARY", "boundary must be effective");
  auto qc = is_qcartier(X, canonical_divisor(X) + delta);
  if (!qc.yes) throw Error("NOT_QCARTIER", "K_X + Delta is not Q-Cartier");
  return BoundarySpec{delta, qc};
}

StabilizationCertificate stabilization_certificate(const AffineToricVariety& X) {
  TWeilDivisor K = canonical_divisor(X);
  auto P1 = section_polyhedron(X, K);
  StabilizationCertificate cert;
  cert.p1_vertices = P1.vertices();
  cert.m_star = P1.vertex_denominator_lcm();
  return cert;
}

namespace {

std::vector<std::vector<MVec>> gen_lists(const std::vector<std::pair<Rat, MonomialFractionalIdeal>>& terms) {
  std::vector<std::vector<MVec>> out;
  for (const auto& [a, I] : terms) out.push_back(I.gens());
  return out;
}

// log resolution of (X, Z + O(-m K_X))
FanRefinement working_resolution(const PairSpec& P, const Int& m, PivotPolicy policy) {
  auto terms = ideal_terms(P);
  auto lists = gen_lists(terms);
  TWeilDivisor mK = Rat(m) * canonical_divisor(P.X);
  std::vector<HPolyhedron> polys{section_polyhedron(P.X, mK)};
  return log_resolution(P.X, lists, polys, policy);
}

MonomialFractionalIdeal module_from_floor_bounds(const AffineToricVariety& X,
                                                 const FanRefinement& fan,
                                                 const std::vector<Rat>& coeff) {
  // O_Y(ceil(coeff)) pushed forward: {u : <u, w_i> >= -ceil(coeff_i)}
  std::vector<HPolyhedron::Constraint> cs;
  for (size_t i = 0; i < fan.ray_count(); ++i)
    cs.push_back({fan.rays()[i], Rat(Int(-coeff[i].ceil()))});
  HPolyhedron P(std::move(cs), X.rank());
  return MonomialFractionalIdeal(P.min_generators(), X);
}

} // namespace

StabilizedPair stabilize(const PairSpec& P, PivotPolicy policy) {
  StabilizedPair S;
  S.cert = stabilization_certificate(P.X);
  S.fan = working_resolution(P, S.cert.m_star, policy);
  auto terms = ideal_terms(P);
  TWeilDivisor Kminus = relcan_minus(S.fan);
  for (size_t i = 0; i < S.fan.ray_count(); ++i) {
    S.A.push_back(Kminus.c[i]);
    S.Z.push_back(pair_valuation(terms, S.fan.rays()[i]));
  }
  return S;
}

MonomialFractionalIdeal pushforward_module(const FanRefinement& f, const TWeilDivisor& E) {
  if (!E.is_integral())
    throw Error("NON_INTEGRAL_DIVISOR", "pushforward of a non-integral divisor");
  std::vector<HPolyhedron::Constraint> cs;
  for (size_t i = 0; i < f.ray_count(); ++i) cs.push_back({f.rays()[i], -E.c[i]});
  HPolyhedron P(std::move(cs), f.rank());
  return MonomialFractionalIdeal(P.min_generators(), f.base());
}

MonomialFractionalIdeal mult_ideal_m(const PairSpec& P, const Int& m, PivotPolicy policy) {
  if (m < 1) throw Error("BAD_M", "J_m needs m >= 1");
  auto fan = working_resolution(P, m, policy);
  auto terms = ideal_terms(P);
  TWeilDivisor Km = limiting_relcan(fan, m);
  std::vector<Rat> coeff(fan.ray_count());
  for (size_t i = 0; i < fan.ray_count(); ++i)
    coeff[i] = Km.c[i] - pair_valuation(terms, fan.rays()[i]);
  return module_from_floor_bounds(P.X, fan, coeff);
}

MonomialFractionalIdeal mult_ideal_at(const StabilizedPair& S, const Rat& t) {
  std::vector<Rat> coeff(S.fan.ray_count());
  for (size_t i = 0; i < S.fan.ray_count(); ++i) coeff[i] = S.A[i] - t * S.Z[i];
  return module_from_floor_bounds(S.fan.base(), S.fan, coeff);
}

std::pair<MonomialFractionalIdeal, StabilizationCertificate> mult_ideal(const PairSpec& P,
                                                                        PivotPolicy policy) {
  StabilizedPair S = stabilize(P, policy);
  return {mult_ideal_at(S, Rat(1)), S.cert};
}

namespace {

bool delta_shares_component_with_z(const PairSpec& P, const TWeilDivisor& delta) {
  auto terms = ideal_terms(P);
  for (size_t i = 0; i < delta.size(); ++i) {
    if (delta.c[i].sign() <= 0) continue;
    for (const auto& [a, I] : terms) {
      (void)a;
      if (I.val(P.X.rays()[i]) > 0) return true;
    }
  }
  return false;
}

} // namespace

MonomialFractionalIdeal log_mult_ideal_on(const BoundarySpec& B, const PairSpec& P,
                                          const StabilizedPair& S) {
  const auto& X = P.X;
  if (!B.delta.is_effective()) throw Error("BAD_BOUNDARY", "boundary must be effective");
  for (const auto& d : B.delta.c)
    if (d >= Rat(1)) throw Error("BAD_BOUNDARY", "floor(Delta) must vanish");
  if (!is_qcartier(X, canonical_divisor(X) + B.delta).yes)
    throw Error("NOT_QCARTIER", "K_X + Delta is not Q-Cartier");
  if (delta_shares_component_with_z(P, B.delta))
    throw Error("BAD_BOUNDARY", "Delta shares a component with the divisorial support of Z");
  TWeilDivisor Kdelta = log_relcan(S.fan, B.delta);
  std::vector<Rat> coeff(S.fan.ray_count());
  for (size_t i = 0; i < S.fan.ray_count(); ++i) coeff[i] = Kdelta.c[i] - S.Z[i];
  return module_from_floor_bounds(X, S.fan, coeff);
}

MonomialFractionalIdeal log_mult_ideal(const BoundarySpec& B, const PairSpec& P) {
  return log_mult_ideal_on(B, P, stabilize(P));
}

FanRefinement pair_linearity_fan(const PairSpec& P) {
  std::vector<FanRefinement> fans;
  auto P1 = section_polyhedron(P.X, canonical_divisor(P.X));
  fans.push_back(normal_fan_restricted(P1, P.X));
  for (const auto& [a, I] : ideal_terms(P)) {
    (void)a;
    fans.push_back(generator_min_fan(I.gens(), P.X));
  }
  return common_refinement(fans);
}

std::optional<Rat> lct(const PairSpec& P) {
  const auto& X = P.X;
  auto P1 = section_polyhedron(X, canonical_divisor(X));
  auto terms = ideal_terms(P);
  auto fan = pair_linearity_fan(P);
  // X log terminal <=> -lp(P1, w) > 0 at every ray of the linearity fan
  for (const auto& w : fan.rays()) {
    auto r = P1.lp_min(w);
    if (r.status != LpStatus::Optimal || -r.value <= Rat(0))
      throw Error("NOT_LOG_TERMINAL", "the variety itself is not log terminal at ray " + w.str());
  }
  std::optional<Rat> best;
  for (const auto& w : fan.rays()) {
    Rat z = pair_valuation(terms, w);
    if (z.sign() <= 0) continue;
    Rat h = -P1.lp_min(w).value;
    Rat t = h / z;
    if (!best || t < *best) best = t;
  }
  return best;
}

std::vector<Rat> jumping_numbers(const PairSpec& P, const Rat& t_max) {
  if (t_max.sign() <= 0) throw Error("BAD_RANGE", "t_max must be positive");
  StabilizedPair S = stabilize(P);
  std::set<Rat> cands;
  for (size_t i = 0; i < S.fan.ray_count(); ++i) {
    if (S.Z[i].sign() <= 0) continue;
    for (Int j = 0;; ++j) {
      Rat t = (S.A[i] + Rat(1) + Rat(j)) / S.Z[i];
      if (t > t_max) break;
      if (t.sign() > 0) cands.insert(t);
    }
  }
  Int den = 1;
  for (const auto& t : cands) den = lcm(den, t.den());
  Rat eps = Rat(1, 2 * den);
  std::vector<Rat> jumps;
  for (const auto& t : cands)
    if (mult_ideal_at(S, t) != mult_ideal_at(S, t - eps)) jumps.push_back(t);
  return jumps;
}

MonomialFractionalIdeal asymptotic_mult_ideal(const AffineToricVariety& X, const TWeilDivisor& D,
                                              const Rat& c) {
  if (!D.is_integral())
    throw Error("NON_INTEGRAL_DIVISOR", "asymptotic multiplier ideal of a non-integral divisor");
  if (c.sign() <= 0) throw Error("BAD_COEFF", "weight must be positive");
  auto sections_poly = [&](const Int& n) {
    return section_polyhedron(X, Rat(Int(-n)) * D); // {<u, v_i> >= -n d_i}
  };
  auto negsections_poly = [&](const Int& n) {
    return section_polyhedron(X, Rat(n) * D); // O(-nD)
  };
  if (sections_poly(1).is_empty())
    throw Error("EMPTY_LINEAR_SYSTEM", "|nD| empty for every n");
  // base ideal of |nD|: sum over sections u of chi^u O(-nD)
  auto base_ideal = [&](const Int& n) {
    MonomialFractionalIdeal W(sections_poly(n).min_generators(), X);
    MonomialFractionalIdeal ONeg(negsections_poly(n).min_generators(), X);
    return product(W, ONeg, X);
  };
  Int nstar = lcm(sections_poly(1).vertex_denominator_lcm(),
                  negsections_poly(1).vertex_denominator_lcm());
  auto at = [&](const Int& n) {
    PairSpec Pn(X, {PairTerm{c / Rat(n), base_ideal(n)}});
    return mult_ideal(Pn).first;
  };
  auto J = at(nstar);
  auto J2 = at(2 * nstar);
  if (!(J == J2))
    throw Error("NO_STABILIZATION", "asymptotic ideal did not stabilize at the certificate bound");
  return J;
}

MonomialFractionalIdeal adjoint_ideal(const PairSpec& P, const TWeilDivisor& H) {
  const auto& X = P.X;
  if (!H.is_integral() || !H.is_effective())
    throw Error("NOT_CARTIER", "H must be an effective integral divisor");
  for (const auto& h : H.c)
    if (h != Rat(0) && h != Rat(1)) throw Error("NOT_CARTIER", "H must be reduced");
  auto qc = is_qcartier(X, H);
  if (!qc.yes || qc.index != 1) throw Error("NOT_CARTIER", "H must be Cartier");
  if (delta_shares_component_with_z(P, H))
    throw Error("SHARED_COMPONENT", "H shares a component with the divisorial support of Z");
  auto [den, uH] = clear_denominators<Lattice::M>(qc.slope);
  (void)den; // index 1: slope already integral
  StabilizedPair S = stabilize(P);
  TWeilDivisor HY = proper_transform(S.fan, H);
  std::vector<Rat> coeff(S.fan.ray_count());
  for (size_t i = 0; i < S.fan.ray_count(); ++i)
    coeff[i] = S.A[i] - S.Z[i] - Rat(pair(uH, S.fan.rays()[i])) + HY.c[i];
  return module_from_floor_bounds(X, S.fan, coeff);
}

std::optional<BoundarySpec> compatible_boundary_search(const PairSpec& P, const Int& m,
                                                       const Int& denominator_bound,
                                                       const CancelToken& cancel) {
  if (m < 2) throw Error("BAD_M", "compatible boundaries need m >= 2");
  const auto& X = P.X;
  auto fan = working_resolution(P, m, PivotPolicy::LexLeast);
  TWeilDivisor Km = limiting_relcan(fan, m);
  size_t r = X.rays().size();
  Int cap = m - 1;
  if (denominator_bound < cap) cap = denominator_bound;
  if (cap < 0) cap = 0;
  // lexicographic walk over numerator vectors in {0..cap}^r
  std::vector<Int> nums(r, Int(0));
  size_t steps = 0;
  while (true) {
    ++steps;
    (void)steps;
    if (cancel.cancelled()) throw Error("TIMEOUT", "compatible boundary search cancelled");
    TWeilDivisor delta(r);
    for (size_t i = 0; i < r; ++i) delta.c[i] = Rat(nums[i]) / Rat(m);
    bool ok = !delta_shares_component_with_z(P, delta);
    if (ok) {
      auto qc = is_qcartier(X, canonical_divisor(X) + delta);
      if (qc.yes) {
        TWeilDivisor Kd = log_relcan(fan, delta);
        if (Kd == Km) return BoundarySpec{delta, qc};
      }
    }
    // next numerator vector, last coordinate fastest
    size_t i = r;
    while (i > 0) {
      --i;
      if (nums[i] < cap) {
        ++nums[i];
        for (size_t j = i + 1; j < r; ++j) nums[j] = 0;
        break;
      }
      if (i == 0) return std::nullopt;
    }
  }
}

} // namespace torimult
