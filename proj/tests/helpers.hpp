#ifndef TORIMULT_TESTS_HELPERS_HPP
#define TORIMULT_TESTS_HELPERS_HPP

#include "torimult/cone.hpp"
#include "torimult/fan.hpp"
#include "torimult/polyhedron.hpp"

#include <functional>
#include <random>
#include <set>

namespace torimult::testing {

inline NVec nv(std::initializer_list<long> xs) { return NVec(xs); }
inline MVec mv(std::initializer_list<long> xs) { return MVec(xs); }

inline NCone ncone(std::initializer_list<NVec> gens) {
  std::vector<NVec> g(gens);
  return NCone(g, g.empty() ? 0 : g.begin()->dim());
}

inline AffineToricVariety plane() { return AffineToricVariety(ncone({nv({1, 0}), nv({0, 1})})); }
inline AffineToricVariety plane3() {
  return AffineToricVariety(ncone({nv({1, 0, 0}), nv({0, 1, 0}), nv({0, 0, 1})}));
}
inline AffineToricVariety quadric_cone() {
  return AffineToricVariety(ncone({nv({1, 0}), nv({1, 2})}));
}
inline AffineToricVariety conifold() {
  return AffineToricVariety(ncone({nv({0, 0, 1}), nv({1, 0, 1}), nv({0, 1, 1}), nv({1, 1, 1})}));
}
inline AffineToricVariety nqg_cone() {
  return AffineToricVariety(ncone({nv({1, 0, 0}), nv({0, 1, 0}), nv({0, 0, 1}), nv({1, 2, -1})}));
}

inline HPolyhedron poly_of(const AffineToricVariety& X, std::initializer_list<Rat> rhs) {
  std::vector<HPolyhedron::Constraint> cs;
  size_t i = 0;
  for (const Rat& r : rhs) cs.push_back({X.rays()[i++], r});
  return HPolyhedron(std::move(cs), X.rank());
}

/// Walks all integer vectors in [-bound, bound]^d.
inline void for_each_box(size_t d, long bound, const std::function<void(const std::vector<Int>&)>& f) {
  std::vector<Int> x(d, Int(-bound));
  while (true) {
    f(x);
    size_t i = 0;
    while (i < d) {
      ++x[i];
      if (x[i] <= bound) break;
      x[i] = -bound;
      ++i;
    }
    if (i == d) return;
  }
}

/// Independent dual-cone oracle: every primitive normal in the box that is
/// nonnegative on the generators and tight on a rank d-1 subset.
template <Lattice L>
std::vector<Vec<dual_lattice(L)>> oracle_dual(const Cone<L>& c, long bound) {
  std::set<std::vector<Int>> out;
  size_t d = c.ambient_dim();
  for_each_box(d, bound, [&](const std::vector<Int>& n) {
    Vec<dual_lattice(L)> v{n};
    if (v.is_zero()) return;
    Int g = content(v);
    IntMat tight;
    for (const auto& gen : c.generators()) {
      Int s = 0;
      for (size_t i = 0; i < d; ++i) s += n[i] * gen.e[i];
      if (s < 0) return;
      if (s == 0) tight.push_back(gen.e);
    }
    if (tight.empty() || rank_of(tight) != d - 1) return;
    out.insert(primitive(v).e);
  });
  std::vector<Vec<dual_lattice(L)>> res;
  for (const auto& e : out) res.push_back(Vec<dual_lattice(L)>{e});
  return res;
}

/// Independent Hilbert basis oracle: box-enumerate the semigroup and filter
/// irreducible elements (box must contain the basis and all decompositions).
inline std::vector<NVec> oracle_hilbert(const NCone& c, long bound) {
  std::vector<NVec> pts;
  for_each_box(c.ambient_dim(), bound, [&](const std::vector<Int>& x) {
    NVec v{x};
    if (!v.is_zero() && c.contains(v)) pts.push_back(v);
  });
  std::vector<NVec> basis;
  for (const auto& x : pts) {
    bool red = false;
    for (const auto& y : pts) {
      if (y == x) continue;
      NVec z = x - y;
      if (!z.is_zero() && c.contains(z)) { red = true; break; }
    }
    if (!red) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

/// Brute-force lattice minimum of <u, w> over poly /\ box.
inline std::optional<Int> oracle_box_ilp(const HPolyhedron& p, const NVec& w, long bound) {
  std::optional<Int> best;
  for_each_box(p.dim(), bound, [&](const std::vector<Int>& x) {
    MVec u{x};
    if (!p.contains(u)) return;
    Int v = pair(u, w);
    if (!best || v < *best) best = v;
  });
  return best;
}

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

} // namespace torimult::testing

#endif
