#include "torimult/ideal.hpp"

#include <algorithm>
#include <set>

namespace torimult {

MonomialFractionalIdeal::MonomialFractionalIdeal(std::vector<MVec> gens, const AffineToricVariety& X)
    : dim_(X.rank()) {
  if (gens.empty()) throw Error("EMPTY_IDEAL", "a fractional ideal needs at least one generator");
  std::set<std::vector<Int>> uniq;
  for (auto& g : gens) uniq.insert(g.e);
  // drop g whenever g - g' lies in sigma-dual for another generator g'
  const MCone& sd = X.sigma_dual();
  std::vector<MVec> kept;
  for (const auto& ge : uniq) {
    MVec g{ge};
    bool redundant = false;
    for (const auto& he : uniq) {
      if (he == ge) continue;
      MVec h{he};
      if (sd.contains(g - h)) { redundant = true; break; }
    }
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  gens_ = std::move(kept);
}

MonomialFractionalIdeal MonomialFractionalIdeal::unit(const AffineToricVariety& X) {
  return MonomialFractionalIdeal({MVec(X.rank())}, X);
}

MonomialFractionalIdeal MonomialFractionalIdeal::maximal_ideal(const AffineToricVariety& X) {
  auto hb = hilbert_basis(X.sigma_dual());
  return MonomialFractionalIdeal(hb, X);
}

bool MonomialFractionalIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_zero();
}

bool MonomialFractionalIdeal::is_integral(const AffineToricVariety& X) const {
  for (const auto& g : gens_)
    if (!X.sigma_dual().contains(g)) return false;
  return true;
}

bool MonomialFractionalIdeal::contains(const MVec& u, const AffineToricVariety& X) const {
  for (const auto& g : gens_)
    if (X.sigma_dual().contains(u - g)) return true;
  return false;
}

bool MonomialFractionalIdeal::contains_ideal(const MonomialFractionalIdeal& other,
                                             const AffineToricVariety& X) const {
  for (const auto& g : other.gens_)
    if (!contains(g, X)) return false;
  return true;
}

Int MonomialFractionalIdeal::val(const NVec& w) const {
  Int best = pair(gens_[0], w);
  for (size_t i = 1; i < gens_.size(); ++i) {
    Int v = pair(gens_[i], w);
    if (v < best) best = v;
  }
  return best;
}

MonomialFractionalIdeal product(const MonomialFractionalIdeal& a, const MonomialFractionalIdeal& b,
                                const AffineToricVariety& X) {
  std::vector<MVec> gens;
  for (const auto& ga : a.gens())
    for (const auto& gb : b.gens()) gens.push_back(ga + gb);
  return MonomialFractionalIdeal(std::move(gens), X);
}

MonomialFractionalIdeal power(const MonomialFractionalIdeal& a, const Int& k,
                              const AffineToricVariety& X) {
  if (k < 0) throw Error("BAD_EXPONENT", "negative ideal power");
  MonomialFractionalIdeal r = MonomialFractionalIdeal::unit(X);
  for (Int i = 0; i < k; ++i) r = product(r, a, X);
  return r;
}

MonomialFractionalIdeal sum(const MonomialFractionalIdeal& a, const MonomialFractionalIdeal& b,
                            const AffineToricVariety& X) {
  std::vector<MVec> gens = a.gens();
  for (const auto& g : b.gens()) gens.push_back(g);
  return MonomialFractionalIdeal(std::move(gens), X);
}

MonomialFractionalIdeal shift(const MonomialFractionalIdeal& a, const MVec& u,
                              const AffineToricVariety& X) {
  std::vector<MVec> gens;
  for (const auto& g : a.gens()) gens.push_back(g + u);
  return MonomialFractionalIdeal(std::move(gens), X);
}

} // namespace torimult
