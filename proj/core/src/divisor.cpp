#include "torimult/divisor.hpp"

namespace torimult {

HPolyhedron section_polyhedron(const AffineToricVariety& X, const TWeilDivisor& D) {
  if (D.size() != X.rays().size())
    throw Error("DIMENSION_MISMATCH", "divisor not aligned with the ray list");
  std::vector<HPolyhedron::Constraint> cs;
  for (size_t i = 0; i < X.rays().size(); ++i) cs.push_back({X.rays()[i], D.c[i]});
  return HPolyhedron(std::move(cs), X.rank());
}

Rat val_ideal(const DivisorialValuation& v, const MonomialFractionalIdeal& I) {
  return Rat(v.q) * Rat(I.val(v.w));
}

Rat nat_val(const AffineToricVariety& X, const DivisorialValuation& v, const TWeilDivisor& D) {
  if (!D.is_integral())
    throw Error("NON_INTEGRAL_DIVISOR", "natural valuation is defined for integral divisors");
  auto r = section_polyhedron(X, D).ilp_min(v.w);
  if (r.status != LpStatus::Optimal)
    throw Error("INFEASIBLE", "section polyhedron unexpectedly empty or unbounded");
  return Rat(v.q) * r.value;
}

Rat limit_val(const AffineToricVariety& X, const DivisorialValuation& v, const TWeilDivisor& D) {
  auto r = section_polyhedron(X, D).lp_min(v.w);
  if (r.status != LpStatus::Optimal)
    throw Error("INFEASIBLE", "section polyhedron unexpectedly empty or unbounded");
  return Rat(v.q) * r.value;
}

TWeilDivisor divisorial_part(const AffineToricVariety& X, const MonomialFractionalIdeal& I) {
  TWeilDivisor D(X.rays().size());
  for (size_t i = 0; i < X.rays().size(); ++i) D.c[i] = Rat(I.val(X.rays()[i]));
  return D;
}

MonomialFractionalIdeal reflexive_hull(const AffineToricVariety& X,
                                       const MonomialFractionalIdeal& I) {
  auto P = section_polyhedron(X, divisorial_part(X, I));
  return MonomialFractionalIdeal(P.min_generators(), X);
}

TWeilDivisor nat_pullback(const FanRefinement& f, const TWeilDivisor& D) {
  if (!D.is_integral())
    throw Error("NON_INTEGRAL_DIVISOR", "natural pullback is defined for integral divisors");
  auto gens = section_polyhedron(f.base(), D).min_generators();
  TWeilDivisor out(f.ray_count());
  for (size_t i = 0; i < f.ray_count(); ++i)
    out.c[i] = HPolyhedron::ilp_min_over(gens, f.rays()[i]).value;
  return out;
}

TWeilDivisor pullback(const FanRefinement& f, const TWeilDivisor& D) {
  auto P = section_polyhedron(f.base(), D);
  TWeilDivisor out(f.ray_count());
  for (size_t i = 0; i < f.ray_count(); ++i) {
    auto r = P.lp_min(f.rays()[i]);
    if (r.status != LpStatus::Optimal)
      throw Error("INFEASIBLE", "section polyhedron unexpectedly empty or unbounded");
    out.c[i] = r.value;
  }
  return out;
}

TWeilDivisor canonical_divisor(const AffineToricVariety& X) {
  TWeilDivisor K(X.rays().size());
  for (auto& x : K.c) x = Rat(-1);
  return K;
}

TWeilDivisor canonical_divisor(const FanRefinement& f) {
  TWeilDivisor K(f.ray_count());
  for (auto& x : K.c) x = Rat(-1);
  return K;
}

TWeilDivisor pushforward_divisor(const FanRefinement& f, const TWeilDivisor& D_on_f) {
  size_t nb = f.base().rays().size();
  TWeilDivisor out(nb);
  for (size_t i = 0; i < nb; ++i) out.c[i] = D_on_f.c[i]; // base rays come first
  return out;
}

TWeilDivisor proper_transform(const FanRefinement& f, const TWeilDivisor& D) {
  TWeilDivisor out(f.ray_count());
  for (size_t i = 0; i < f.base().rays().size(); ++i) out.c[i] = D.c[i];
  return out;
}

TWeilDivisor limiting_relcan(const FanRefinement& f, const Int& m) {
  if (m < 1) throw Error("BAD_M", "limiting relative canonical needs m >= 1");
  const auto& X = f.base();
  TWeilDivisor mK = Rat(m) * canonical_divisor(X);
  auto gens = section_polyhedron(X, mK).min_generators();
  TWeilDivisor out(f.ray_count());
  for (size_t i = 0; i < f.ray_count(); ++i) {
    Rat ilp = HPolyhedron::ilp_min_over(gens, f.rays()[i]).value;
    out.c[i] = Rat(-1) - ilp / Rat(m);
  }
  return out;
}

TWeilDivisor relcan(const FanRefinement& f) {
  TWeilDivisor minusK = Rat(-1) * canonical_divisor(f.base());
  TWeilDivisor out = pullback(f, minusK);
  for (auto& x : out.c) x = Rat(-1) + x;
  return out;
}

TWeilDivisor relcan_minus(const FanRefinement& f) {
  TWeilDivisor out = pullback(f, canonical_divisor(f.base()));
  for (auto& x : out.c) x = Rat(-1) - x;
  return out;
}

QCartier is_qcartier(const AffineToricVariety& X, const TWeilDivisor& D) {
  if (D.size() != X.rays().size())
    throw Error("DIMENSION_MISMATCH", "divisor not aligned with the ray list");
  IntMat m;
  std::vector<Rat> rhs;
  for (size_t i = 0; i < X.rays().size(); ++i) {
    m.push_back(X.rays()[i].e);
    rhs.push_back(D.c[i]);
  }
  auto sol = solve_unique(m, rhs);
  QCartier out;
  if (!sol) return out;
  out.yes = true;
  out.slope = RatVec(X.rank());
  Int den = 1;
  for (size_t j = 0; j < X.rank(); ++j) {
    out.slope[j] = (*sol)[j];
    den = lcm(den, (*sol)[j].den());
  }
  for (const auto& d : D.c) den = lcm(den, d.den());
  out.index = den;
  return out;
}

TWeilDivisor log_relcan(const FanRefinement& f, const TWeilDivisor& delta) {
  const auto& X = f.base();
  if (delta.size() != X.rays().size())
    throw Error("DIMENSION_MISMATCH", "boundary not aligned with the base ray list");
  if (!delta.is_effective()) throw Error("BAD_BOUNDARY", "boundary must be effective");
  TWeilDivisor KplusDelta = canonical_divisor(X) + delta;
  auto qc = is_qcartier(X, KplusDelta);
  if (!qc.yes) throw Error("NOT_QCARTIER", "K_X + Delta is not Q-Cartier");
  TWeilDivisor out(f.ray_count());
  TWeilDivisor deltaY = proper_transform(f, delta);
  for (size_t i = 0; i < f.ray_count(); ++i)
    out.c[i] = Rat(-1) + deltaY.c[i] - pair_rat(qc.slope, f.rays()[i]);
  return out;
}

namespace {

// constraints of the chart sections of a divisor on Y around the center of w
HPolyhedron star_polyhedron(const FanRefinement& Y, const NVec& w, const TWeilDivisor& D_on_Y) {
  std::vector<HPolyhedron::Constraint> cs;
  for (size_t j : Y.star_ray_indices(w)) cs.push_back({Y.rays()[j], D_on_Y.c[j]});
  return HPolyhedron(std::move(cs), Y.rank());
}

} // namespace

Rat nat_val_on_fan(const FanRefinement& Y, const NVec& w, const TWeilDivisor& D_on_Y) {
  if (!D_on_Y.is_integral())
    throw Error("NON_INTEGRAL_DIVISOR", "natural valuation is defined for integral divisors");
  auto r = star_polyhedron(Y, w, D_on_Y).ilp_min(w);
  if (r.status != LpStatus::Optimal)
    throw Error("INFEASIBLE", "local section polyhedron empty or unbounded");
  return r.value;
}

Rat limit_val_on_fan(const FanRefinement& Y, const NVec& w, const TWeilDivisor& D_on_Y) {
  auto r = star_polyhedron(Y, w, D_on_Y).lp_min(w);
  if (r.status != LpStatus::Optimal)
    throw Error("INFEASIBLE", "local section polyhedron empty or unbounded");
  return r.value;
}

TWeilDivisor nat_pullback_rel(const FanRefinement& V, const FanRefinement& Y,
                              const TWeilDivisor& D_on_Y) {
  TWeilDivisor out(V.ray_count());
  for (size_t i = 0; i < V.ray_count(); ++i)
    out.c[i] = nat_val_on_fan(Y, V.rays()[i], D_on_Y);
  return out;
}

TWeilDivisor pullback_rel(const FanRefinement& V, const FanRefinement& Y,
                          const TWeilDivisor& D_on_Y) {
  TWeilDivisor out(V.ray_count());
  for (size_t i = 0; i < V.ray_count(); ++i)
    out.c[i] = limit_val_on_fan(Y, V.rays()[i], D_on_Y);
  return out;
}

TWeilDivisor limiting_relcan_rel(const FanRefinement& V, const FanRefinement& Y, const Int& m) {
  if (m < 1) throw Error("BAD_M", "limiting relative canonical needs m >= 1");
  TWeilDivisor mKY = Rat(m) * canonical_divisor(Y);
  TWeilDivisor out(V.ray_count());
  for (size_t i = 0; i < V.ray_count(); ++i)
    out.c[i] = Rat(-1) - nat_val_on_fan(Y, V.rays()[i], mKY) / Rat(m);
  return out;
}

} // namespace torimult
