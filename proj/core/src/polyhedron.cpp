#include "torimult/polyhedron.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace torimult {

bool HPolyhedron::contains(const RatVec& u) const {
  for (const auto& c : cs_)
    if (pair_rat(u, c.normal) < c.rhs) return false;
  return true;
}

bool HPolyhedron::contains(const MVec& u) const {
  for (const auto& c : cs_)
    if (Rat(pair(u, c.normal)) < c.rhs) return false;
  return true;
}

MCone HPolyhedron::recession_cone() const {
  std::vector<NVec> normals;
  for (const auto& c : cs_) normals.push_back(c.normal);
  NCone k(normals, dim_);
  return dualize(k);
}

HPolyhedron::LpOutcome HPolyhedron::lp_min(const NVec& objective) const {
  // u = p - q with p, q >= 0; <u, n_i> - s_i = rhs_i with slack s_i >= 0.
  size_t m = cs_.size();
  size_t d = dim_;
  size_t n = 2 * d + m;
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(n));
  std::vector<Rat> b(m), c(n);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < d; ++j) {
      A[i][j] = Rat(cs_[i].normal.e[j]);
      A[i][d + j] = Rat(Int(-cs_[i].normal.e[j]));
    }
    A[i][2 * d + i] = Rat(-1);
    b[i] = cs_[i].rhs;
  }
  for (size_t j = 0; j < d; ++j) {
    c[j] = Rat(objective.e[j]);
    c[d + j] = Rat(Int(-objective.e[j]));
  }
  auto r = simplex_solve(A, b, c);
  LpOutcome out;
  out.status = r.status;
  if (r.status == LpStatus::Optimal) {
    out.value = r.value;
    out.witness = RatVec(d);
    for (size_t j = 0; j < d; ++j) out.witness[j] = r.x[j] - r.x[d + j];
  }
  return out;
}

bool HPolyhedron::is_empty() const {
  NVec zero(dim_);
  return lp_min(zero).status == LpStatus::Infeasible;
}

std::vector<RatVec> HPolyhedron::vertices() const {
  size_t d = dim_;
  std::vector<RatVec> verts;
  std::set<std::vector<std::pair<std::string, std::string>>> seen; // exact dedupe
  size_t m = cs_.size();
  std::vector<size_t> idx(d);
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
    if (pos == d) {
      IntMat mat;
      std::vector<Rat> rhs;
      for (size_t i : idx) {
        mat.push_back(cs_[i].normal.e);
        rhs.push_back(cs_[i].rhs);
      }
      auto sol = solve_unique(mat, rhs);
      if (!sol) return;
      RatVec u(d);
      for (size_t j = 0; j < d; ++j) u[j] = (*sol)[j];
      if (!contains(u)) return;
      std::vector<std::pair<std::string, std::string>> key;
      for (const auto& x : u.e) key.emplace_back(x.num().get_str(), x.den().get_str());
      if (seen.insert(key).second) verts.push_back(u);
      return;
    }
    for (size_t i = start; i < m; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  if (m >= d && d > 0) rec(0, 0);
  std::sort(verts.begin(), verts.end(), [](const RatVec& a, const RatVec& b) {
    for (size_t i = 0; i < a.dim(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  });
  return verts;
}

Int HPolyhedron::vertex_denominator_lcm() const {
  Int l = 1;
  for (const auto& v : vertices())
    for (const auto& x : v.e) l = lcm(l, x.den());
  return l;
}

MVec HPolyhedron::find_lattice_point() const {
  auto rec = recession_cone();
  if (!rec.is_full_dimensional())
    throw Error("UNSUPPORTED", "lattice point search needs a full-dimensional recession cone");
  NVec zero(dim_);
  auto lp = lp_min(zero);
  if (lp.status == LpStatus::Infeasible) throw Error("INFEASIBLE", "empty polyhedron");
  // round the rational point up along an interior recession direction
  MVec base(dim_);
  for (size_t j = 0; j < dim_; ++j) base.e[j] = lp.witness[j].ceil();
  MVec interior(dim_);
  for (const auto& g : rec.generators()) interior = interior + g;
  // k with <base + k*interior, n_i> >= rhs_i for all i; <interior, n_i> > 0
  Int k = 0;
  for (const auto& c : cs_) {
    Int ip = pair(interior, c.normal);
    if (ip <= 0) throw Error("UNSUPPORTED", "recession cone not full-dimensional");
    Rat deficit = c.rhs - Rat(pair(base, c.normal));
    if (deficit.sign() > 0) {
      Int need = (deficit / Rat(ip)).ceil();
      if (need > k) k = need;
    }
  }
  return base + k * interior;
}

std::vector<MVec> HPolyhedron::lattice_points_truncated(const NVec& weight, const Rat& bound) const {
  // truncated region: constraints + <u, weight> <= bound; must be a polytope
  std::vector<Constraint> tcs = cs_;
  tcs.push_back({-weight, -bound});
  HPolyhedron trunc(tcs, dim_);
  // per-coordinate bounds by LP
  std::vector<Int> lo(dim_), hi(dim_);
  for (size_t j = 0; j < dim_; ++j) {
    NVec ej(dim_);
    ej.e[j] = 1;
    auto mn = trunc.lp_min(ej);
    if (mn.status == LpStatus::Infeasible) return {};
    auto mx = trunc.lp_min(-ej);
    if (mn.status != LpStatus::Optimal || mx.status != LpStatus::Optimal)
      throw Error("UNBOUNDED", "truncated enumeration region is unbounded");
    lo[j] = mn.value.ceil();
    hi[j] = (-mx.value).floor();
  }
  // depth-first with interval pruning on the constraints
  std::vector<MVec> out;
  std::vector<Int> x(dim_);
  std::function<void(size_t)> rec = [&](size_t j) {
    // prune: each constraint must still be satisfiable by the free suffix
    for (const auto& c : tcs) {
      Rat acc(0);
      for (size_t i = 0; i < j; ++i) acc += Rat(Int(x[i] * c.normal.e[i]));
      for (size_t i = j; i < dim_; ++i) {
        const Int& w = c.normal.e[i];
        acc += Rat(Int(w > 0 ? w * hi[i] : w * lo[i]));
      }
      if (acc < c.rhs) return;
    }
    if (j == dim_) {
      out.push_back(MVec{x});
      return;
    }
    for (Int v = lo[j]; v <= hi[j]; ++v) {
      x[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MVec> HPolyhedron::min_generators() const {
  auto rec = recession_cone();
  if (!rec.is_full_dimensional() || !rec.is_pointed())
    throw Error("UNSUPPORTED", "min_generators needs a pointed full-dimensional recession cone");
  if (is_empty()) throw Error("INFEASIBLE", "no lattice points");

  // strictly positive weight on the recession cone
  NVec xi(dim_);
  for (const auto& c : cs_) xi = xi + c.normal;

  // every minimal element u satisfies <u, xi> < max_vertex<.,xi> + B_W where
  // B_W bounds <s, xi> over recession points not above any single generator
  // (Caratheodory: all coefficients < 1)
  Rat vmax;
  bool havev = false;
  for (const auto& v : vertices()) {
    Rat val = pair_rat(v, xi);
    if (!havev || val > vmax) { vmax = val; havev = true; }
  }
  if (!havev) throw Error("INFEASIBLE", "polyhedron without vertices");
  std::vector<Int> ray_weights;
  for (const auto& g : rec.generators()) ray_weights.push_back(pair(g, xi));
  std::sort(ray_weights.rbegin(), ray_weights.rend());
  Int bw = 0;
  for (size_t i = 0; i < std::min(dim_, ray_weights.size()); ++i) bw += ray_weights[i];
  Rat bound = vmax + Rat(bw);

  auto pts = lattice_points_truncated(xi, bound);
  auto hb = hilbert_basis(rec);

  std::vector<MVec> gens;
  for (const auto& u : pts) {
    bool minimal = true;
    for (const auto& h : hb) {
      if (contains(u - h)) { minimal = false; break; }
    }
    if (minimal) gens.push_back(u);
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

HPolyhedron::IlpOutcome HPolyhedron::ilp_min_over(const std::vector<MVec>& gens, const NVec& objective) {
  IlpOutcome out;
  out.status = LpStatus::Infeasible;
  bool first = true;
  Int best;
  for (const auto& g : gens) {
    Int v = pair(g, objective);
    if (first || v < best) {
      best = v;
      out.witness = g;
      first = false;
    }
  }
  if (!first) {
    out.status = LpStatus::Optimal;
    out.value = Rat(best);
  }
  return out;
}

HPolyhedron::IlpOutcome HPolyhedron::ilp_min(const NVec& objective) const {
  if (is_empty()) return {LpStatus::Infeasible, Rat(0), MVec{}};
  auto rec = recession_cone();
  for (const auto& g : rec.generators())
    if (pair(g, objective) < 0) return {LpStatus::Unbounded, Rat(0), MVec{}};
  return ilp_min_over(min_generators(), objective);
}

} // namespace torimult
