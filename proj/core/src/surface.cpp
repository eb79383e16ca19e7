#include "torimult/surface.hpp"

#include <algorithm>

namespace torimult {

const char* to_string(SurfaceNumClass c) {
  switch (c) {
    case SurfaceNumClass::NumLt: return "NUM_LT";
    case SurfaceNumClass::NumLcOnly: return "NUM_LC_ONLY";
    default: return "NEITHER";
  }
}

std::pair<FanRefinement, IntersectionData> surface_minimal_resolution(const AffineToricVariety& X) {
  if (X.rank() != 2) throw Error("WRONG_DIMENSION", "surface resolution needs rank 2");
  auto hb = hilbert_basis(X.sigma());
  // angular order from one boundary ray to the other: a before b iff det(a,b) > 0
  auto cross = [](const NVec& a, const NVec& b) { return Int(a.e[0] * b.e[1] - a.e[1] * b.e[0]); };
  std::vector<NVec> rays = hb;
  NVec v1 = X.rays()[0], v2 = X.rays()[1];
  if (cross(v1, v2) < 0) std::swap(v1, v2);
  std::sort(rays.begin(), rays.end(), [&](const NVec& a, const NVec& b) { return cross(a, b) > 0; });

  std::vector<NCone> cones;
  for (size_t i = 0; i + 1 < rays.size(); ++i)
    cones.emplace_back(std::vector<NVec>{rays[i], rays[i + 1]}, 2);
  FanRefinement fan(X, std::move(cones));

  IntersectionData data;
  for (size_t i = 1; i + 1 < rays.size(); ++i) data.exceptional.push_back(rays[i]);
  size_t n = data.exceptional.size();
  data.matrix.assign(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    // adjacent-ray relation w_{i-1} + w_{i+1} = b_i w_i gives E_i^2 = -b_i
    const NVec& prev = rays[i];     // rays index shifted by one
    const NVec& self = rays[i + 1];
    const NVec& next = rays[i + 2];
    NVec s = prev + next;
    // s = b * self exactly
    Int b = 0;
    for (size_t j = 0; j < 2; ++j)
      if (self.e[j] != 0) { b = s.e[j] / self.e[j]; break; }
    if (!(b * self == s) || b < 2)
      throw Error("INTERNAL", "broken adjacent-ray relation in the minimal resolution");
    data.matrix[i][i] = Rat(Int(-b));
    if (i > 0) data.matrix[i][i - 1] = Rat(1);
    if (i + 1 < n) data.matrix[i][i + 1] = Rat(1);
  }

  if (n > 0) {
    // (K_Y - sum a_i E_i) . E_j = 0 with K_Y . E_j = -E_j^2 - 2
    IntMat m(n, std::vector<Int>(n));
    std::vector<Rat> rhs(n);
    for (size_t j = 0; j < n; ++j) {
      for (size_t i = 0; i < n; ++i) m[j][i] = data.matrix[i][j].num(); // entries integral
      rhs[j] = -data.matrix[j][j] - Rat(2);
    }
    auto sol = solve_unique(m, rhs);
    if (!sol) throw Error("INTERNAL", "intersection matrix not invertible");
    data.discrepancies = *sol;
  }
  return {fan, data};
}

SurfaceNumClass surface_numerical_classify(const AffineToricVariety& X) {
  auto [fan, data] = surface_minimal_resolution(X);
  (void)fan;
  bool boundary = false;
  for (const auto& a : data.discrepancies) {
    if (a < Rat(-1)) return SurfaceNumClass::Neither;
    if (a == Rat(-1)) boundary = true;
  }
  return boundary ? SurfaceNumClass::NumLcOnly : SurfaceNumClass::NumLt;
}

} // namespace torimult
