#ifndef TORIMULT_LATTICE_HPP
#define TORIMULT_LATTICE_HPP

#include "torimult/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace torimult {

/// Library-level error with a stable machine-readable code (NON_POINTED,
/// INFEASIBLE, NOT_QCARTIER, ...). The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

enum class Lattice { N, M };
constexpr Lattice dual_lattice(Lattice l) { return l == Lattice::N ? Lattice::M : Lattice::N; }

/// Point of the rank-d lattice tagged by the side it lives on. Valuations and
/// fan rays live in N, monomial exponents in M; the pairing only crosses tags.
template <Lattice L>
struct Vec {
  std::vector<Int> e;

  Vec() = default;
  explicit Vec(size_t n) : e(n, Int(0)) {}
  Vec(std::initializer_list<long> xs) { for (long x : xs) e.emplace_back(x); }
  explicit Vec(std::vector<Int> xs) : e(std::move(xs)) {}

  size_t dim() const { return e.size(); }
  const Int& operator[](size_t i) const { return e[i]; }
  Int& operator[](size_t i) { return e[i]; }

  bool is_zero() const {
    for (const auto& x : e) if (x != 0) return false;
    return true;
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }
  friend Vec operator*(const Int& c, const Vec& a) {
    Vec r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r.e[i] = c * a.e[i];
    return r;
  }
  Vec operator-() const {
    Vec r(dim());
    for (size_t i = 0; i < dim(); ++i) r.e[i] = -e[i];
    return r;
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.e == b.e; }
  friend bool operator!=(const Vec& a, const Vec& b) { return a.e != b.e; }
  /// Lexicographic; the library's canonical ordering for deterministic output.
  friend bool operator<(const Vec& a, const Vec& b) { return a.e < b.e; }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) s += ",";
      s += e[i].get_str();
    }
    return s + ")";
  }
};

using NVec = Vec<Lattice::N>;
using MVec = Vec<Lattice::M>;

inline Int pair(const MVec& u, const NVec& w) {
  Int s = 0;
  for (size_t i = 0; i < u.dim(); ++i) s += u.e[i] * w.e[i];
  return s;
}
inline Int pair(const NVec& w, const MVec& u) { return pair(u, w); }

/// Rational point (LP vertices, slopes in M_Q).
struct RatVec {
  std::vector<Rat> e;
  RatVec() = default;
  explicit RatVec(size_t n) : e(n) {}
  size_t dim() const { return e.size(); }
  const Rat& operator[](size_t i) const { return e[i]; }
  Rat& operator[](size_t i) { return e[i]; }
  friend bool operator==(const RatVec& a, const RatVec& b) { return a.e == b.e; }
  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) s += ",";
      s += e[i].str();
    }
    return s + ")";
  }
};

template <Lattice L>
Rat pair_rat(const RatVec& u, const Vec<L>& w) {
  Rat s;
  for (size_t i = 0; i < u.dim(); ++i) s += u.e[i] * Rat(w.e[i]);
  return s;
}

template <Lattice L>
Int content(const Vec<L>& v) {
  Int g = 0;
  for (const auto& x : v.e) g = gcd(g, x);
  return g;
}

/// v / gcd(entries). Errors on the zero vector.
template <Lattice L>
Vec<L> primitive(const Vec<L>& v) {
  Int g = content(v);
  if (g == 0) throw Error("ZERO_VECTOR", "primitive part of the zero vector");
  Vec<L> r(v.dim());
  for (size_t i = 0; i < v.dim(); ++i) r.e[i] = v.e[i] / g;
  return r;
}

/// Least k > 0 with k*u integral, and that integral vector.
template <Lattice L>
std::pair<Int, Vec<L>> clear_denominators(const RatVec& u) {
  Int k = 1;
  for (const auto& x : u.e) k = lcm(k, x.den());
  Vec<L> v(u.dim());
  for (size_t i = 0; i < u.dim(); ++i) v.e[i] = u.e[i].num() * (k / u.e[i].den());
  return {k, v};
}

// ---- exact integer/rational linear algebra (small dense matrices) ----

using IntMat = std::vector<std::vector<Int>>;

/// |det| of a square matrix.
Int abs_det(const IntMat& m);

/// Rank over Q.
size_t rank_of(const IntMat& m);

/// Solves m * x = rhs over Q (m square or rectangular, solution unique when
/// columns independent). Returns nullopt when inconsistent or underdetermined.
std::optional<std::vector<Rat>> solve_unique(const IntMat& m, const std::vector<Rat>& rhs);

/// Rows spanning a finite-index sublattice of {x : m x = 0}. Primitive (and
/// hence the full kernel) when the kernel has rank one, the only case the
/// library relies on.
IntMat integer_kernel(const IntMat& m);

/// Product of the nonzero invariant factors of m; equals the index of the
/// row lattice inside its saturation. 1 iff the rows extend to a basis.
Int lattice_index(const IntMat& m);

/// One integral solution of <x, w> = c for primitive w (by extended gcd).
std::vector<Int> integral_solution_of_functional(const std::vector<Int>& w, const Int& c);

} // namespace torimult

#endif
