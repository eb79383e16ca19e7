#include "torimult/cone.hpp"

#include "boxenum.hpp"

#include <map>
#include <set>

namespace torimult {

namespace {

template <Lattice L>
IntMat rows_of(const std::vector<Vec<L>>& vs) {
  IntMat m;
  m.reserve(vs.size());
  for (const auto& v : vs) m.push_back(v.e);
  return m;
}

// Columns = vs; solves sum t_i vs[i] = x over Q. Unique when vs independent.
template <Lattice L>
std::optional<std::vector<Rat>> coords_in(const std::vector<Vec<L>>& vs, const std::vector<Int>& x) {
  size_t d = x.size();
  IntMat cols(d, std::vector<Int>(vs.size()));
  for (size_t j = 0; j < vs.size(); ++j)
    for (size_t i = 0; i < d; ++i) cols[i][j] = vs[j].e[i];
  std::vector<Rat> rhs;
  rhs.reserve(d);
  for (const auto& xi : x) rhs.emplace_back(xi);
  return solve_unique(cols, rhs);
}

// Candidate facet normals of cone(gens) in R^d, full-dimensional case:
// rank-1 kernels of (d-1)-subsets, oriented nonnegative on all generators.
template <Lattice L>
std::vector<Vec<dual_lattice(L)>> fulldim_facet_normals(const std::vector<Vec<L>>& gens, size_t d) {
  using DV = Vec<dual_lattice(L)>;
  std::set<std::vector<Int>> seen;
  std::vector<DV> out;
  if (d == 1) {
    // a full-dimensional pointed cone in rank 1 is a half-line
    DV n(1);
    n.e[0] = gens.at(0).e[0] > 0 ? 1 : -1;
    out.push_back(n);
    return out;
  }
  std::vector<size_t> idx(d - 1);
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
    if (pos == d - 1) {
      IntMat m;
      for (size_t i : idx) m.push_back(gens[i].e);
      if (rank_of(m) != d - 1) return;
      IntMat ker = integer_kernel(m);
      if (ker.size() != 1) return;
      std::vector<Int> n = ker[0];
      int pos_cnt = 0, neg_cnt = 0;
      for (const auto& g : gens) {
        Int s = 0;
        for (size_t i = 0; i < d; ++i) s += n[i] * g.e[i];
        if (s > 0) ++pos_cnt;
        if (s < 0) ++neg_cnt;
      }
      if (pos_cnt && neg_cnt) return;
      if (neg_cnt) for (auto& x : n) x = -x;
      DV v{n};
      v = primitive(v);
      if (seen.insert(v.e).second) out.push_back(v);
      return;
    }
    for (size_t i = start; i < gens.size(); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

template <Lattice L>
Cone<L>::Cone(std::vector<Vec<L>> gens, size_t ambient_dim) : dim_(ambient_dim) {
  std::set<std::vector<Int>> seen;
  for (auto& g : gens) {
    if (g.dim() != dim_) throw Error("DIMENSION_MISMATCH", "generator rank mismatch");
    if (g.is_zero()) continue;
    auto p = primitive(g);
    if (seen.insert(p.e).second) gens_.push_back(p);
  }
  std::sort(gens_.begin(), gens_.end());
  rank_ = gens_.empty() ? 0 : rank_of(rows_of(gens_));
  if (rank_ == dim_) {
    auto ns = fulldim_facet_normals(gens_, dim_);
    if (gens_.size() > rank_) {
      // keep extreme rays only: a generator is extreme iff its tight facet
      // normals span a hyperplane
      std::vector<Vec<L>> extreme;
      for (const auto& g : gens_) {
        IntMat tight;
        for (const auto& n : ns)
          if (pair(n, g) == 0) tight.push_back(n.e);
        if (!tight.empty() && rank_of(tight) == dim_ - 1) extreme.push_back(g);
      }
      if (!extreme.empty()) gens_ = std::move(extreme);
    }
    normals_ = std::move(ns);
    normals_ready_ = true;
  }
}

template <Lattice L>
bool Cone<L>::is_pointed() const {
  if (gens_.empty()) return true;
  if (rank_ == dim_) {
    IntMat m = rows_of(facet_normals());
    return !m.empty() && rank_of(m) == dim_;
  }
  // independent generators always span a pointed cone
  if (is_simplicial()) return true;
  throw Error("UNSUPPORTED", "pointedness query on a lower-dimensional non-simplicial cone");
}

template <Lattice L>
auto Cone<L>::facet_normals() const -> const std::vector<Vec<Dual>>& {
  if (!normals_ready_) {
    if (rank_ != dim_)
      throw Error("UNSUPPORTED", "facet normals of a lower-dimensional cone");
    normals_ = fulldim_facet_normals(gens_, dim_);
    normals_ready_ = true;
  }
  return normals_;
}

template <Lattice L>
bool Cone<L>::contains(const Vec<L>& v) const {
  if (rank_ == dim_) {
    for (const auto& n : facet_normals())
      if (pair(n, v) < 0) return false;
    return true;
  }
  if (is_simplicial()) {
    auto c = coords_in(gens_, v.e);
    if (!c) return false;
    for (const auto& t : *c)
      if (t.sign() < 0) return false;
    return true;
  }
  throw Error("UNSUPPORTED", "membership in a lower-dimensional non-simplicial cone");
}

template <Lattice L>
bool Cone<L>::contains_in_relint(const Vec<L>& v) const {
  if (rank_ == dim_) {
    for (const auto& n : facet_normals())
      if (pair(n, v) <= 0) return false;
    return true;
  }
  if (is_simplicial()) {
    auto c = coords_in(gens_, v.e);
    if (!c) return false;
    for (const auto& t : *c)
      if (t.sign() <= 0) return false;
    return true;
  }
  throw Error("UNSUPPORTED", "relative interior query on a lower-dimensional non-simplicial cone");
}

template <Lattice L>
std::vector<Vec<L>> Cone<L>::face_through(const Vec<L>& v) const {
  if (!contains(v)) throw Error("OUTSIDE_SUPPORT", "point not in cone");
  if (rank_ != dim_) throw Error("UNSUPPORTED", "face query on a lower-dimensional cone");
  std::vector<Vec<L>> face;
  for (const auto& g : gens_) {
    bool keep = true;
    for (const auto& n : facet_normals()) {
      if (pair(n, v) != 0) continue; // facet not tight at v
      if (pair(n, g) != 0) { keep = false; break; }
    }
    if (keep) face.push_back(g);
  }
  return face;
}

template <Lattice L>
Cone<dual_lattice(L)> dualize(const Cone<L>& c) {
  using DC = Cone<dual_lattice(L)>;
  if (!c.is_full_dimensional())
    throw Error("NON_POINTED", "dual of a lower-dimensional cone is not pointed");
  auto ns = c.facet_normals();
  IntMat m = rows_of(ns);
  if (ns.empty() || rank_of(m) != c.ambient_dim())
    throw Error("NON_POINTED", "cone contains a line; pointed dual requested");
  return DC(ns, c.ambient_dim());
}

namespace {

// Lattice points of the closed fundamental parallelepiped of independent
// generators, i.e. {sum t_i g_i : 0 <= t_i <= 1} /\ lattice.
template <Lattice L>
std::vector<Vec<L>> parallelepiped_points(const std::vector<Vec<L>>& gens, size_t d) {
  std::vector<Int> lo(d, Int(0)), hi(d, Int(0));
  for (size_t j = 0; j < d; ++j)
    for (const auto& g : gens) {
      if (g.e[j] < 0) lo[j] += g.e[j];
      else hi[j] += g.e[j];
    }
  std::vector<Vec<L>> pts;
  detail::for_each_in_box(lo, hi, [&](const std::vector<Int>& x) {
    auto c = coords_in(gens, x);
    if (c) {
      bool ok = true;
      for (const auto& t : *c)
        if (t < Rat(0) || t > Rat(1)) { ok = false; break; }
      if (ok) pts.push_back(Vec<L>{x});
    }
    return true;
  });
  return pts;
}

// Pulling triangulation with labels: `coords` are full-dimensional working
// coordinates of the labelled ambient generators, the apex is always the
// label-lex-least generator of each face, so shared faces of a fan are
// triangulated identically. Returns label subsets.
template <Lattice L>
std::vector<std::vector<Vec<L>>> triangulate_labelled(const std::vector<Vec<L>>& coords,
                                                      const std::vector<Vec<L>>& labels,
                                                      size_t d) {
  Cone<L> c(coords, d);
  if (c.generators().size() == d) {
    std::vector<Vec<L>> piece;
    std::map<std::vector<Int>, Vec<L>> back;
    for (size_t i = 0; i < coords.size(); ++i) back[primitive(coords[i]).e] = labels[i];
    for (const auto& g : c.generators()) piece.push_back(back.at(g.e));
    return {piece};
  }
  std::map<std::vector<Int>, std::pair<Vec<L>, Vec<L>>> by_coord; // primitive coord -> (coord,label)
  for (size_t i = 0; i < coords.size(); ++i)
    by_coord[primitive(coords[i]).e] = {coords[i], labels[i]};

  // apex: generator with lex-least label
  std::vector<Int> apex_coord;
  Vec<L> apex_label;
  bool first = true;
  for (const auto& g : c.generators()) {
    const auto& [co, la] = by_coord.at(g.e);
    (void)co;
    if (first || la < apex_label) { apex_coord = g.e; apex_label = la; first = false; }
  }

  std::vector<std::vector<Vec<L>>> out;
  for (const auto& n : c.facet_normals()) {
    Int ap = 0;
    for (size_t i = 0; i < d; ++i) ap += n.e[i] * apex_coord[i];
    if (ap == 0) continue; // facets through the apex are swallowed
    std::vector<Vec<L>> fcoords, flabels;
    for (const auto& g : c.generators()) {
      if (pair(n, g) != 0) continue;
      const auto& [co, la] = by_coord.at(g.e);
      fcoords.push_back(co);
      flabels.push_back(la);
    }
    // facet span coordinates
    std::vector<Vec<L>> basis;
    {
      IntMat acc;
      for (const auto& g : fcoords) {
        acc.push_back(g.e);
        if (rank_of(acc) < acc.size()) acc.pop_back();
        else basis.push_back(g);
      }
    }
    size_t r = basis.size();
    std::vector<Vec<L>> sub;
    for (const auto& g : fcoords) {
      auto cc = coords_in(basis, g.e);
      Int den = 1;
      for (const auto& t : *cc) den = lcm(den, t.den());
      Vec<L> v(r);
      for (size_t i = 0; i < r; ++i) v.e[i] = (*cc)[i].num() * (den / (*cc)[i].den());
      sub.push_back(v);
    }
    for (auto piece : triangulate_labelled(sub, flabels, r)) {
      piece.push_back(apex_label);
      std::sort(piece.begin(), piece.end());
      out.push_back(std::move(piece));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

template <Lattice L>
std::vector<std::vector<Vec<L>>> triangulate(const Cone<L>& c) {
  if (c.is_simplicial()) return {c.generators()};
  if (!c.is_full_dimensional())
    throw Error("UNSUPPORTED", "triangulation of a lower-dimensional non-simplicial cone");
  return triangulate_labelled(c.generators(), c.generators(), c.ambient_dim());
}

template <Lattice L>
std::vector<Vec<L>> hilbert_basis(const Cone<L>& c) {
  const auto& gs = c.generators();
  size_t d = c.ambient_dim();
  if (gs.empty()) return {};
  if (!c.is_simplicial() && !c.is_full_dimensional())
    throw Error("UNSUPPORTED", "hilbert basis of a lower-dimensional non-simplicial cone");
  if (c.is_full_dimensional() && !c.is_pointed())
    throw Error("NON_POINTED", "hilbert basis of a non-pointed cone");

  std::vector<std::vector<Vec<L>>> pieces = triangulate(c);

  std::set<std::vector<Int>> cand_set;
  for (const auto& piece : pieces)
    for (const auto& p : parallelepiped_points(piece, d))
      if (!p.is_zero()) cand_set.insert(p.e);

  // membership in the ambient cone
  auto in_cone = [&](const Vec<L>& v) { return c.contains(v); };

  std::vector<Vec<L>> cands;
  for (const auto& e : cand_set) cands.push_back(Vec<L>{e});
  std::vector<Vec<L>> basis;
  for (const auto& x : cands) {
    bool reducible = false;
    for (const auto& y : cands) {
      if (y == x) continue;
      Vec<L> z = x - y;
      if (z.is_zero()) continue;
      if (in_cone(z)) { reducible = true; break; }
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

template <Lattice L>
Int cone_multiplicity(const Cone<L>& c) {
  if (!c.is_simplicial()) throw Error("NON_SIMPLICIAL", "multiplicity of a non-simplicial cone");
  IntMat m;
  for (const auto& g : c.generators()) m.push_back(g.e);
  return lattice_index(m);
}

// explicit instantiations
template class Cone<Lattice::N>;
template class Cone<Lattice::M>;
template Cone<Lattice::M> dualize(const Cone<Lattice::N>&);
template Cone<Lattice::N> dualize(const Cone<Lattice::M>&);
template std::vector<NVec> hilbert_basis(const NCone&);
template std::vector<MVec> hilbert_basis(const MCone&);
template Int cone_multiplicity(const NCone&);
template Int cone_multiplicity(const MCone&);
template std::vector<std::vector<NVec>> triangulate(const NCone&);
template std::vector<std::vector<MVec>> triangulate(const MCone&);

} // namespace torimult
