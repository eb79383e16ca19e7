#include "torimult/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torimult {

AffineToricVariety::AffineToricVariety(NCone sigma) : sigma_(std::move(sigma)) {
  if (!sigma_.is_full_dimensional())
    throw Error("NON_FULLDIM", "ambient cone must be full-dimensional");
  if (!sigma_.is_pointed())
    throw Error("NON_POINTED", "ambient cone must be strongly convex");
  dual_ = dualize(sigma_);
}

bool AffineToricVariety::is_smooth() const {
  return sigma_.is_simplicial() && cone_multiplicity(sigma_) == 1;
}

FanRefinement::FanRefinement(AffineToricVariety base, std::vector<NCone> maximal)
    : base_(std::move(base)) {
  normalize(std::move(maximal));
}

FanRefinement FanRefinement::identity(const AffineToricVariety& X) {
  return FanRefinement(X, {X.sigma()});
}

void FanRefinement::normalize(std::vector<NCone> maximal) {
  rays_ = base_.rays();
  std::set<std::vector<Int>> base_set;
  for (const auto& r : rays_) base_set.insert(r.e);
  std::set<std::vector<Int>> extra;
  for (const auto& c : maximal)
    for (const auto& g : c.generators())
      if (!base_set.count(g.e)) extra.insert(g.e);
  exceptional_.clear();
  for (const auto& e : extra) {
    exceptional_.push_back(rays_.size());
    rays_.push_back(NVec{e});
  }
  std::map<std::vector<Int>, size_t> index;
  for (size_t i = 0; i < rays_.size(); ++i) index[rays_[i].e] = i;
  std::set<std::vector<size_t>> cone_set;
  for (const auto& c : maximal) {
    std::vector<size_t> ids;
    for (const auto& g : c.generators()) ids.push_back(index.at(g.e));
    std::sort(ids.begin(), ids.end());
    cone_set.insert(ids);
  }
  cones_.assign(cone_set.begin(), cone_set.end());
}

NCone FanRefinement::cone(size_t i) const {
  std::vector<NVec> gens;
  for (size_t j : cones_[i]) gens.push_back(rays_[j]);
  return NCone(gens, rank());
}

size_t FanRefinement::ray_index(const NVec& r) const {
  for (size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i] == r) return i;
  throw Error("UNKNOWN_RAY", "ray not in fan: " + r.str());
}

bool FanRefinement::is_simplicial() const {
  for (size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].size() != rank()) return false;
  return true;
}

bool FanRefinement::is_smooth() const {
  for (size_t i = 0; i < cones_.size(); ++i) {
    auto c = cone(i);
    if (!c.is_simplicial() || cone_multiplicity(c) != 1) return false;
  }
  return true;
}

std::vector<NVec> FanRefinement::smallest_cone_containing(const NVec& w) const {
  for (size_t i = 0; i < cones_.size(); ++i) {
    auto c = cone(i);
    if (c.contains(w)) return c.face_through(w);
  }
  throw Error("OUTSIDE_SUPPORT", "point not in the support of the fan: " + w.str());
}

std::vector<size_t> FanRefinement::star_ray_indices(const NVec& w) const {
  std::set<size_t> ids;
  bool found = false;
  for (size_t i = 0; i < cones_.size(); ++i) {
    if (!cone(i).contains(w)) continue;
    found = true;
    for (size_t j : cones_[i]) ids.insert(j);
  }
  if (!found) throw Error("OUTSIDE_SUPPORT", "point not in the support of the fan: " + w.str());
  return {ids.begin(), ids.end()};
}

bool FanRefinement::refines(const FanRefinement& other) const {
  for (size_t i = 0; i < cones_.size(); ++i) {
    auto c = cone(i);
    bool inside_some = false;
    for (size_t j = 0; j < other.cones_.size(); ++j) {
      auto d = other.cone(j);
      bool all = true;
      for (const auto& g : c.generators())
        if (!d.contains(g)) { all = false; break; }
      if (all) { inside_some = true; break; }
    }
    if (!inside_some) return false;
  }
  return true;
}

FanRefinement FanRefinement::stellar_subdivision(const NVec& bb) const {
  NVec b = primitive(bb);
  std::vector<NCone> out;
  for (size_t i = 0; i < cones_.size(); ++i) {
    auto c = cone(i);
    if (!c.contains(b)) {
      out.push_back(c);
      continue;
    }
    for (const auto& n : c.facet_normals()) {
      if (pair(n, b) == 0) continue; // b lies on this facet
      std::vector<NVec> gens{b};
      for (const auto& g : c.generators())
        if (pair(n, g) == 0) gens.push_back(g);
      out.emplace_back(gens, rank());
    }
  }
  return FanRefinement(base_, std::move(out));
}

FanRefinement FanRefinement::triangulated() const {
  std::vector<NCone> out;
  for (size_t i = 0; i < cones_.size(); ++i) {
    auto c = cone(i);
    for (const auto& piece : triangulate(c)) out.emplace_back(piece, rank());
  }
  return FanRefinement(base_, std::move(out));
}

FanRefinement common_refinement(const std::vector<FanRefinement>& fans) {
  if (fans.empty()) throw Error("BASE_MISMATCH", "no fans given");
  const auto& base = fans[0].base();
  for (const auto& f : fans)
    if (f.base().rays() != base.rays())
      throw Error("BASE_MISMATCH", "common refinement over different bases");
  FanRefinement acc = fans[0];
  for (size_t k = 1; k < fans.size(); ++k) {
    std::vector<NCone> pieces;
    for (size_t i = 0; i < acc.max_cones().size(); ++i) {
      auto ci = acc.cone(i);
      for (size_t j = 0; j < fans[k].max_cones().size(); ++j) {
        auto cj = fans[k].cone(j);
        // H-intersection: all facet normals of both
        std::vector<MVec> normals = ci.facet_normals();
        for (const auto& n : cj.facet_normals()) normals.push_back(n);
        MCone h(normals, base.rank());
        if (!h.is_full_dimensional()) continue;
        NCone inter = [&]() -> NCone {
          try {
            return dualize(h);
          } catch (const Error&) {
            return NCone(); // non-pointed h: lower-dimensional intersection
          }
        }();
        if (inter.generators().empty() || !inter.is_full_dimensional()) continue;
        pieces.push_back(inter);
      }
    }
    acc = FanRefinement(base, std::move(pieces));
  }
  return acc;
}

namespace {

// Regions of sigma where each candidate linear functional is the minimum.
FanRefinement linearity_fan(const std::vector<RatVec>& candidates, const AffineToricVariety& X) {
  size_t d = X.rank();
  std::vector<NCone> regions;
  for (size_t a = 0; a < candidates.size(); ++a) {
    // {w in sigma : <cand_a, w> <= <cand_b, w> for all b}
    std::vector<MVec> normals;
    for (const auto& n : X.sigma_dual().generators()) normals.push_back(n);
    for (size_t b = 0; b < candidates.size(); ++b) {
      if (b == a) continue;
      RatVec diff(d);
      for (size_t i = 0; i < d; ++i) diff[i] = candidates[b][i] - candidates[a][i];
      auto [den, iv] = clear_denominators<Lattice::M>(diff);
      (void)den;
      if (iv.is_zero()) continue;
      normals.push_back(iv);
    }
    MCone h(normals, d);
    if (!h.is_full_dimensional()) continue;
    try {
      NCone region = dualize(h);
      if (region.is_full_dimensional()) regions.push_back(region);
    } catch (const Error&) {
      // non-pointed constraint cone: the region is lower-dimensional
    }
  }
  return FanRefinement(X, std::move(regions));
}

} // namespace

FanRefinement normal_fan_restricted(const HPolyhedron& poly, const AffineToricVariety& X) {
  auto verts = poly.vertices();
  if (verts.empty()) {
    if (poly.is_empty()) throw Error("INFEASIBLE", "normal fan of an empty polyhedron");
    throw Error("UNSUPPORTED", "polyhedron has no vertices");
  }
  return linearity_fan(verts, X);
}

FanRefinement generator_min_fan(const std::vector<MVec>& gens, const AffineToricVariety& X) {
  std::vector<RatVec> cands;
  for (const auto& g : gens) {
    RatVec v(g.dim());
    for (size_t i = 0; i < g.dim(); ++i) v[i] = Rat(g.e[i]);
    cands.push_back(v);
  }
  return linearity_fan(cands, X);
}

namespace {

bool lex_less_cone(const std::vector<NVec>& a, const std::vector<NVec>& b) {
  return a < b;
}

} // namespace

FanRefinement resolve(const FanRefinement& fan, PivotPolicy policy) {
  FanRefinement f = fan.is_simplicial() ? fan : fan.triangulated();
  const bool least = policy == PivotPolicy::LexLeast;
  while (true) {
    // locate maximal multiplicity
    Int maxmult = 1;
    std::vector<size_t> worst;
    for (size_t i = 0; i < f.max_cones().size(); ++i) {
      Int m = cone_multiplicity(f.cone(i));
      if (m > maxmult) {
        maxmult = m;
        worst.assign(1, i);
      } else if (m == maxmult && m > 1) {
        worst.push_back(i);
      }
    }
    if (maxmult == 1) return f;
    // pick the pivot cone per policy (lex on its generator list)
    size_t pick = worst[0];
    for (size_t i : worst) {
      auto gi = f.cone(i).generators();
      auto gp = f.cone(pick).generators();
      if (least ? lex_less_cone(gi, gp) : lex_less_cone(gp, gi)) pick = i;
    }
    NCone target = f.cone(pick);
    auto hb = hilbert_basis(target);
    std::vector<NVec> cands;
    {
      std::set<std::vector<Int>> raygens;
      for (const auto& g : target.generators()) raygens.insert(g.e);
      for (const auto& h : hb)
        if (!raygens.count(h.e)) cands.push_back(h);
    }
    // choose the candidate minimizing the worst multiplicity of the new
    // pieces it creates anywhere in the fan; ties lexicographic per policy
    NVec best;
    Int best_worst = 0;
    bool have = false;
    for (const auto& b : cands) {
      Int w = 1;
      for (size_t i = 0; i < f.max_cones().size(); ++i) {
        auto c = f.cone(i);
        if (!c.contains(b)) continue;
        for (const auto& n : c.facet_normals()) {
          if (pair(n, b) == 0) continue;
          std::vector<NVec> gens{b};
          for (const auto& g : c.generators())
            if (pair(n, g) == 0) gens.push_back(g);
          Int m = cone_multiplicity(NCone(gens, f.rank()));
          if (m > w) w = m;
        }
      }
      bool better = !have || w < best_worst ||
                    (w == best_worst && (least ? b < best : best < b));
      if (better) {
        best = b;
        best_worst = w;
        have = true;
      }
    }
    if (!have) // a singular simplicial cone always has a non-ray basis point
      throw Error("INTERNAL", "no stellar pivot for a singular cone");
    f = f.stellar_subdivision(best);
  }
}

FanRefinement log_resolution(const AffineToricVariety& X,
                             const std::vector<std::vector<MVec>>& ideal_gens,
                             const std::vector<HPolyhedron>& polys, PivotPolicy policy) {
  std::vector<FanRefinement> fans{FanRefinement::identity(X)};
  for (const auto& gens : ideal_gens) {
    if (gens.empty()) throw Error("EMPTY_IDEAL", "log resolution of the zero module");
    fans.push_back(generator_min_fan(gens, X));
  }
  for (const auto& p : polys) fans.push_back(generator_min_fan(p.min_generators(), X));
  return resolve(common_refinement(fans), policy);
}

NCone center(const NVec& w, const FanRefinement& fan) {
  return NCone(fan.smallest_cone_containing(primitive(w)), fan.rank());
}

bool locally_principal_on(const FanRefinement& fan, const std::vector<MVec>& gens) {
  for (size_t i = 0; i < fan.max_cones().size(); ++i) {
    auto rays = fan.max_cones()[i];
    bool cone_ok = false;
    for (const auto& g0 : gens) {
      bool minimal_everywhere = true;
      for (size_t j : rays) {
        Int v0 = pair(g0, fan.rays()[j]);
        for (const auto& g : gens)
          if (pair(g, fan.rays()[j]) < v0) { minimal_everywhere = false; break; }
        if (!minimal_everywhere) break;
      }
      if (minimal_everywhere) { cone_ok = true; break; }
    }
    if (!cone_ok) return false;
  }
  return true;
}

} // namespace torimult
