#ifndef TORIMULT_SURFACE_HPP
#define TORIMULT_SURFACE_HPP

#include "torimult/divisor.hpp"

namespace torimult {

/// Exceptional curves of the minimal resolution of a toric surface with their
/// intersection matrix and the numerical discrepancies solved from
/// (K_Y - sum a_i E_i) . E_j = 0.
struct IntersectionData {
  std::vector<NVec> exceptional;            // interior rays, angular order
  std::vector<std::vector<Rat>> matrix;     // E_i . E_j
  std::vector<Rat> discrepancies;           // a_i
};

/// Unique minimal smooth subdivision of a two-dimensional cone
/// (Hirzebruch-Jung); WRONG_DIMENSION unless rank 2.
std::pair<FanRefinement, IntersectionData>
surface_minimal_resolution(const AffineToricVariety& X);

enum class SurfaceNumClass { NumLt, NumLcOnly, Neither };
const char* to_string(SurfaceNumClass c);

/// Numerically log terminal / numerically log canonical via the sign of the
/// numerical discrepancies.
SurfaceNumClass surface_numerical_classify(const AffineToricVariety& X);

} // namespace torimult

#endif
