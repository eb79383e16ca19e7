#ifndef TORIMULT_SINGULARITY_HPP
#define TORIMULT_SINGULARITY_HPP

#include "torimult/multiplier.hpp"

namespace torimult {

enum class LogLevel { LogTerminal, StrictlyLogCanonical, NotLogCanonical, Unset };
enum class CanLevel { Terminal, Canonical, Neither, Unset };

/// A valuation together with the exact quantity certifying a tight or failed
/// bound; re-evaluating at w reproduces the value.
struct Witness {
  NVec w;
  Rat value;
};

struct Classification {
  LogLevel log_level = LogLevel::Unset;
  CanLevel can_level = CanLevel::Unset;
  std::vector<Witness> log_witnesses;
  std::vector<Witness> can_witnesses;
};

const char* to_string(LogLevel l);
const char* to_string(CanLevel l);

/// a_{m,F}(X,Z) at the prime divisor of a primitive w: the K_{m} coefficient
/// plus 1 minus the pair valuation; independent of the resolution realizing w.
Rat limiting_log_discrepancy(const PairSpec& P, const NVec& w, const Int& m);

/// a_F(X,Z) = LP+(w) - Z(w), the K_{Y/X} route.
Rat log_discrepancy(const PairSpec& P, const NVec& w);

/// Log terminal / strictly log canonical / not log canonical, decided on the
/// pair's linearity fan; witnesses carry h(w) = -lp(P1,w) - Z(w).
Classification classify_log(const PairSpec& P);

/// An lc center: the face of sigma whose orbit closure is the center,
/// together with the face of the linearity fan on which the limiting log
/// discrepancy vanishes identically and one interior witness of it.
struct LcCenter {
  std::vector<NVec> face_rays; // face of sigma carrying the orbit closure
  std::vector<NVec> zero_face; // rays of the h = 0 face producing this center
  NVec witness;                // primitive interior point of the zero face
  bool minimal = false;        // minimal with respect to inclusion of centers
};

/// Centers of zero limiting log discrepancy for a strictly log canonical
/// pair. NOT_STRICTLY_LC otherwise.
std::vector<LcCenter> lc_centers(const PairSpec& P);

/// Terminal / canonical / neither via g(w) = LP+(w) - Z(w) over exceptional
/// primitive w, decided per linearity cone on a finite candidate set built
/// from Hilbert bases and two-generator sums. Q-Cartier divisor bodies are
/// valuated with pullback semantics; all other bodies scheme-theoretically.
Classification classify_can(const PairSpec& P);

/// The module inclusion O_X(m(K_X+Z)).O_Y <= O_Y(m(K_Y+Z_Y)) on a high log
/// resolution (witness rays of classify_can are forced into the fan, so the
/// test is decisive at sufficiently divisible m). All bodies must be
/// Q-Cartier divisors (NOT_QCARTIER_BODY) and m must clear every denominator
/// (BAD_M).
bool canonical_inclusion_check(const PairSpec& P, const Int& m);

/// Certified divisibility: least m0 with m0*(K_X+Z) integral and m0 clearing
/// the pullback stabilization denominators; the inclusion check at any
/// multiple of m0 is equivalent to canonicity.
Int canonical_inclusion_m0(const PairSpec& P);

} // namespace torimult

#endif
