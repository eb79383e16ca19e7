#include "torimult/singularity.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torimult {

const char* to_string(LogLevel l) {
  switch (l) {
    case LogLevel::LogTerminal: return "LOG_TERMINAL";
    case LogLevel::StrictlyLogCanonical: return "STRICTLY_LOG_CANONICAL";
    case LogLevel::NotLogCanonical: return "NOT_LOG_CANONICAL";
    default: return "UNSET";
  }
}

const char* to_string(CanLevel l) {
  switch (l) {
    case CanLevel::Terminal: return "TERMINAL";
    case CanLevel::Canonical: return "CANONICAL";
    case CanLevel::Neither: return "NEITHER";
    default: return "UNSET";
  }
}

Rat limiting_log_discrepancy(const PairSpec& P, const NVec& ww, const Int& m) {
  NVec w = primitive(ww);
  if (!P.X.sigma().contains(w)) throw Error("OUTSIDE_SUPPORT", "valuation not in sigma");
  TWeilDivisor mK = Rat(m) * canonical_divisor(P.X);
  Rat ilp = section_polyhedron(P.X, mK).ilp_min(w).value;
  Rat km = Rat(-1) - ilp / Rat(m);
  return km + Rat(1) - pair_valuation(ideal_terms(P), w);
}

Rat log_discrepancy(const PairSpec& P, const NVec& ww) {
  NVec w = primitive(ww);
  if (!P.X.sigma().contains(w)) throw Error("OUTSIDE_SUPPORT", "valuation not in sigma");
  TWeilDivisor minusK = Rat(-1) * canonical_divisor(P.X);
  Rat lp = section_polyhedron(P.X, minusK).lp_min(w).value;
  return lp - pair_valuation(ideal_terms(P), w);
}

Classification classify_log(const PairSpec& P) {
  const auto& X = P.X;
  auto terms = ideal_terms(P);
  auto fan = pair_linearity_fan(P);
  auto P1 = section_polyhedron(X, canonical_divisor(X));
  Classification out;
  bool zero_somewhere = false;
  for (const auto& w : fan.rays()) {
    Rat h = -P1.lp_min(w).value - pair_valuation(terms, w);
    if (h.sign() < 0) {
      out.log_level = LogLevel::NotLogCanonical;
      out.log_witnesses = {{w, h}};
      return out;
    }
    if (h.is_zero()) {
      zero_somewhere = true;
      out.log_witnesses.push_back({w, h});
    }
  }
  out.log_level = zero_somewhere ? LogLevel::StrictlyLogCanonical : LogLevel::LogTerminal;
  return out;
}

std::vector<LcCenter> lc_centers(const PairSpec& P) {
  auto cls = classify_log(P);
  if (cls.log_level != LogLevel::StrictlyLogCanonical)
    throw Error("NOT_STRICTLY_LC", "lc centers exist only for strictly log canonical pairs");
  const auto& X = P.X;
  auto terms = ideal_terms(P);
  auto fan = pair_linearity_fan(P);
  auto P1 = section_polyhedron(X, canonical_divisor(X));
  auto h = [&](const NVec& w) { return -P1.lp_min(w).value - pair_valuation(terms, w); };

  // zero rays per maximal cone span the faces of the zero locus of h
  std::map<std::vector<std::vector<Int>>, LcCenter> centers; // key: face ray set
  for (size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
    std::vector<NVec> zero;
    for (size_t j : fan.max_cones()[ci])
      if (h(fan.rays()[j]).is_zero()) zero.push_back(fan.rays()[j]);
    if (zero.empty()) continue;
    size_t n = zero.size();
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
      NVec w(X.rank());
      std::vector<NVec> zface;
      for (size_t b = 0; b < n; ++b)
        if (mask & (size_t(1) << b)) {
          w = w + zero[b];
          zface.push_back(zero[b]);
        }
      auto face = X.sigma().face_through(w);
      std::vector<std::vector<Int>> key;
      for (const auto& g : face) key.push_back(g.e);
      std::sort(key.begin(), key.end());
      auto it = centers.find(key);
      if (it == centers.end()) {
        LcCenter c;
        c.face_rays = face;
        c.zero_face = zface;
        c.witness = primitive(w);
        centers[key] = c;
      } else if (zface.size() > it->second.zero_face.size()) {
        it->second.zero_face = zface; // keep the largest vanishing face
        it->second.witness = primitive(w);
      }
    }
  }
  std::vector<LcCenter> out;
  for (auto& [k, c] : centers) out.push_back(c);
  // minimal center = maximal face with respect to inclusion of its ray set
  auto subset = [](const std::vector<NVec>& a, const std::vector<NVec>& b) {
    for (const auto& x : a) {
      bool found = false;
      for (const auto& y : b)
        if (x == y) { found = true; break; }
      if (!found) return false;
    }
    return true;
  };
  for (auto& c : out) {
    c.minimal = true;
    for (const auto& d : out) {
      if (&d == &c) continue;
      if (subset(c.face_rays, d.face_rays) && c.face_rays.size() < d.face_rays.size())
        c.minimal = false;
    }
  }
  return out;
}

namespace {

// per-term valuation for classify_can: pullback slopes for Q-Cartier divisor
// bodies, generator minima otherwise
struct CanValuation {
  std::vector<std::pair<Rat, RatVec>> linear;                       // coeff, slope
  std::vector<std::pair<Rat, MonomialFractionalIdeal>> ideal_like;  // coeff, module

  Rat value(const NVec& w) const {
    Rat z;
    for (const auto& [a, u] : linear) z += a * pair_rat(u, w);
    for (const auto& [a, I] : ideal_like) z += a * Rat(I.val(w));
    return z;
  }
};

CanValuation can_valuation(const PairSpec& P) {
  CanValuation v;
  for (const auto& t : P.terms) {
    if (t.coeff.is_zero()) continue;
    if (std::holds_alternative<TWeilDivisor>(t.body)) {
      const auto& D = std::get<TWeilDivisor>(t.body);
      auto qc = is_qcartier(P.X, D);
      if (qc.yes) {
        v.linear.emplace_back(t.coeff, qc.slope);
        continue;
      }
      auto gens = section_polyhedron(P.X, D).min_generators();
      v.ideal_like.emplace_back(t.coeff, MonomialFractionalIdeal(gens, P.X));
    } else {
      v.ideal_like.emplace_back(t.coeff, std::get<MonomialFractionalIdeal>(t.body));
    }
  }
  return v;
}

FanRefinement can_linearity_fan(const PairSpec& P, const CanValuation& v) {
  std::vector<FanRefinement> fans;
  TWeilDivisor minusK = Rat(-1) * canonical_divisor(P.X);
  fans.push_back(normal_fan_restricted(section_polyhedron(P.X, minusK), P.X));
  for (const auto& [a, I] : v.ideal_like) {
    (void)a;
    fans.push_back(generator_min_fan(I.gens(), P.X));
  }
  return common_refinement(fans);
}

} // namespace

Classification classify_can(const PairSpec& P) {
  const auto& X = P.X;
  Classification out;
  if (X.rank() == 1) { // no exceptional valuations over a smooth curve
    out.can_level = CanLevel::Terminal;
    return out;
  }
  auto v = can_valuation(P);
  TWeilDivisor minusK = Rat(-1) * canonical_divisor(X);
  auto Pplus = section_polyhedron(X, minusK);
  auto g = [&](const NVec& w) { return Pplus.lp_min(w).value - v.value(w); };

  std::set<std::vector<Int>> sigma_rays;
  for (const auto& r : X.rays()) sigma_rays.insert(r.e);

  auto fan = can_linearity_fan(P, v);
  Rat min_val;      // over genuine exceptional candidates (primitivized)
  NVec min_wit;
  bool have_min = false;
  auto consider = [&](const NVec& cand) {
    Int c = content(cand);
    NVec w0 = primitive(cand);
    if (sigma_rays.count(w0.e)) return;  // never happens for the sum candidates
    Rat val = g(cand) / Rat(c);
    if (!have_min || val < min_val) {
      min_val = val;
      min_wit = w0;
      have_min = true;
    }
  };

  for (size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
    NCone tau = fan.cone(ci);
    auto hb = hilbert_basis(tau);
    std::vector<NVec> rays_in, others;
    for (const auto& b : hb) {
      if (sigma_rays.count(b.e)) rays_in.push_back(b);
      else others.push_back(b);
    }
    // negative value anywhere on the Hilbert basis drives primitive
    // non-ray discrepancies to -infinity
    for (const auto& b : hb) {
      Rat gb = g(b);
      if (gb.sign() >= 0) continue;
      if (!sigma_rays.count(b.e)) {
        consider(b);
        continue;
      }
      // b is a sigma ray: exhibit k*b + b' with negative value
      for (const auto& b2 : hb) {
        if (b2 == b) continue;
        Int k = ((g(b2)) / (-gb)).ceil() + 1;
        consider(k * b + b2);
        break;
      }
      if (hb.size() == 1) // cannot happen for full-dimensional tau, rank >= 2
        throw Error("INTERNAL", "singleton hilbert basis on a full-dimensional cone");
    }
    for (const auto& b : others) consider(b);
    for (size_t i = 0; i < rays_in.size(); ++i)
      for (size_t j = i + 1; j < rays_in.size(); ++j) consider(rays_in[i] + rays_in[j]);
    for (const auto& r : rays_in)
      for (const auto& b : others) consider(r + b);
  }

  if (!have_min) { // no exceptional candidates at all (smooth and tiny)
    out.can_level = CanLevel::Terminal;
    return out;
  }
  out.can_witnesses.push_back({min_wit, g(min_wit)});
  if (min_val < Rat(1)) out.can_level = CanLevel::Neither;
  else if (min_val == Rat(1)) out.can_level = CanLevel::Canonical;
  else out.can_level = CanLevel::Terminal;
  return out;
}

namespace {

TWeilDivisor z_divisor_of_qcartier_bodies(const PairSpec& P) {
  TWeilDivisor Z(P.X.rays().size());
  for (const auto& t : P.terms) {
    if (t.coeff.is_zero()) continue;
    if (!std::holds_alternative<TWeilDivisor>(t.body))
      throw Error("NOT_QCARTIER_BODY", "inclusion test needs Q-Cartier divisor bodies");
    const auto& D = std::get<TWeilDivisor>(t.body);
    if (!is_qcartier(P.X, D).yes)
      throw Error("NOT_QCARTIER_BODY", "inclusion test needs Q-Cartier divisor bodies");
    Z = Z + t.coeff * D;
  }
  return Z;
}

} // namespace

Int canonical_inclusion_m0(const PairSpec& P) {
  const auto& X = P.X;
  TWeilDivisor KZ = canonical_divisor(X) + z_divisor_of_qcartier_bodies(P);
  Int m0 = 1;
  for (const auto& c : KZ.c) m0 = lcm(m0, c.den());
  // clear the vertex denominators of the pullback polyhedron of -(K_X+Z)
  TWeilDivisor negKZ = Rat(-1) * KZ;
  m0 = lcm(m0, section_polyhedron(X, negKZ).vertex_denominator_lcm());
  return m0;
}

bool canonical_inclusion_check(const PairSpec& P, const Int& m) {
  const auto& X = P.X;
  TWeilDivisor Zdiv = z_divisor_of_qcartier_bodies(P);
  TWeilDivisor KZ = canonical_divisor(X) + Zdiv;
  TWeilDivisor mKZ = Rat(m) * KZ;
  if (!mKZ.is_integral()) throw Error("BAD_M", "m(K_X + Z) must be integral");

  // module O_X(m(K_X+Z)): sections {<u, v_i> >= -m kz_i}
  auto W = section_polyhedron(X, Rat(-1) * mKZ);
  auto gens = W.min_generators();

  // high log resolution: principalize the section module, O(-mK), the body
  // modules, and force the classify_can witness rays into the fan
  std::vector<std::vector<MVec>> ideal_lists;
  for (const auto& t : P.terms) {
    if (t.coeff.is_zero()) continue;
    const auto& D = std::get<TWeilDivisor>(t.body);
    Int dden = 1;
    for (const auto& c : D.c) dden = lcm(dden, c.den());
    ideal_lists.push_back(section_polyhedron(X, Rat(dden) * D).min_generators());
  }
  TWeilDivisor mK = Rat(m) * canonical_divisor(X);
  std::vector<HPolyhedron> polys{W, section_polyhedron(X, mK)};
  auto fan = log_resolution(X, ideal_lists, polys);
  auto cls = classify_can(P);
  for (const auto& wit : cls.can_witnesses) fan = resolve(fan.stellar_subdivision(wit.w));

  TWeilDivisor ZY = proper_transform(fan, Zdiv);
  for (size_t i = 0; i < fan.ray_count(); ++i) {
    Rat rhs = Rat(m) * (Rat(-1) + ZY.c[i]); // coefficient of m(K_Y + Z_Y)
    for (const auto& gvec : gens)
      if (Rat(pair(gvec, fan.rays()[i])) + rhs < Rat(0)) return false;
  }
  return true;
}

} // namespace torimult
