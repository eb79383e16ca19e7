#include "torimult/lattice.hpp"

namespace torimult {

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat to_rat(const IntMat& m) {
  RatMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const auto& x : m[i]) r[i].emplace_back(x);
  }
  return r;
}

// Row echelon over Q; returns pivot columns. Mutates a (and rhs if given).
std::vector<size_t> echelon(RatMat& a, std::vector<Rat>* rhs) {
  std::vector<size_t> pivots;
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
    Rat inv = Rat(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    if (rhs) (*rhs)[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      if (rhs) (*rhs)[i] -= f * (*rhs)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

Int abs_det(const IntMat& m) {
  size_t n = m.size();
  RatMat a = to_rat(m);
  Rat det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) { std::swap(a[p], a[c]); det = -det; }
    det *= a[c][c];
    Rat inv = Rat(1) / a[c][c];
    for (size_t j = c; j < n; ++j) a[c][j] *= inv;
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Rat ad = det.sign() < 0 ? -det : det;
  return ad.num(); // determinant of an integer matrix is integral
}

size_t rank_of(const IntMat& m) {
  RatMat a = to_rat(m);
  return echelon(a, nullptr).size();
}

std::optional<std::vector<Rat>> solve_unique(const IntMat& m, const std::vector<Rat>& rhs) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  RatMat a = to_rat(m);
  std::vector<Rat> b = rhs;
  auto pivots = echelon(a, &b);
  // consistency: zero rows must carry zero rhs
  for (size_t i = pivots.size(); i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  if (pivots.size() < cols) return std::nullopt; // underdetermined
  std::vector<Rat> x(cols);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

IntMat integer_kernel(const IntMat& m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  RatMat a = to_rat(m);
  auto pivots = echelon(a, nullptr);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  IntMat basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    // rational kernel vector with free column fc = 1
    std::vector<Rat> v(cols);
    v[fc] = Rat(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][fc];
    Int den = 1;
    for (const auto& x : v) den = lcm(den, x.den());
    std::vector<Int> iv(cols);
    Int g = 0;
    for (size_t j = 0; j < cols; ++j) {
      iv[j] = v[j].num() * (den / v[j].den());
      g = gcd(g, iv[j]);
    }
    if (g > 1) for (auto& x : iv) x /= g;
    basis.push_back(std::move(iv));
  }
  return basis;
}

Int lattice_index(const IntMat& m) {
  // Smith normal form by naive elimination; matrices here are tiny.
  IntMat a = m;
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  Int result = 1;
  size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // find nonzero entry with smallest |value| in the remaining block
    size_t pi = rows, pj = cols;
    Int best = 0;
    for (size_t i = r; i < rows; ++i)
      for (size_t j = c; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Int v = abs(a[i][j]);
        if (best == 0 || v < best) { best = v; pi = i; pj = j; }
      }
    if (pi == rows) break;
    std::swap(a[pi], a[r]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][c]);
    bool clean = true;
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Int q = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
      if (a[i][c] != 0) clean = false;
    }
    for (size_t j = c + 1; j < cols; ++j) {
      if (a[r][j] == 0) continue;
      Int q = a[r][j] / a[r][c];
      for (size_t i = r; i < rows; ++i) a[i][j] -= q * a[i][c];
      if (a[r][j] != 0) clean = false;
    }
    if (!clean) continue; // repeat with smaller pivot
    result *= abs(a[r][c]);
    ++r;
    ++c;
  }
  return result;
}

std::vector<Int> integral_solution_of_functional(const std::vector<Int>& w, const Int& c) {
  // extended gcd across coordinates
  size_t n = w.size();
  std::vector<Int> coef(n, Int(0));
  Int g = 0;
  for (size_t i = 0; i < n; ++i) {
    if (w[i] == 0) continue;
    if (g == 0) {
      g = abs(w[i]);
      coef[i] = w[i] > 0 ? 1 : -1;
    } else {
      Int s, t, g2;
      mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
      for (size_t j = 0; j < i; ++j) coef[j] *= s;
      coef[i] = t;
      g = g2;
    }
  }
  if (g == 0 || c % g != 0) throw Error("NO_INTEGRAL_SOLUTION", "functional level has no lattice point");
  Int f = c / g;
  for (auto& x : coef) x *= f;
  return coef;
}

} // namespace torimult
