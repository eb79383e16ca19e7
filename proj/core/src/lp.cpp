#include "torimult/lp.hpp"

namespace torimult {

namespace {

// Dense tableau: rows = m constraints, columns = n variables; basis[i] is the
// variable basic in row i. Reduced costs kept in `cost`, objective in `obj`.
struct Tableau {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> rhs;
  std::vector<Rat> cost;
  Rat obj;
  std::vector<size_t> basis;

  size_t rows() const { return a.size(); }
  size_t cols() const { return a.empty() ? 0 : a[0].size(); }

  void pivot(size_t pr, size_t pc) {
    Rat inv = Rat(1) / a[pr][pc];
    for (auto& v : a[pr]) v *= inv;
    rhs[pr] *= inv;
    for (size_t i = 0; i < rows(); ++i) {
      if (i == pr || a[i][pc].is_zero()) continue;
      Rat f = a[i][pc];
      for (size_t j = 0; j < cols(); ++j) a[i][j] -= f * a[pr][j];
      rhs[i] -= f * rhs[pr];
    }
    if (!cost[pc].is_zero()) {
      Rat f = cost[pc];
      for (size_t j = 0; j < cols(); ++j) cost[j] -= f * a[pr][j];
      obj -= f * rhs[pr];
    }
    basis[pr] = pc;
  }

  // Bland: entering = least-index negative reduced cost; leaving = min ratio,
  // ties by least basic variable index. Returns Optimal or Unbounded.
  LpStatus run(const std::vector<bool>& allowed) {
    while (true) {
      size_t pc = cols();
      for (size_t j = 0; j < cols(); ++j)
        if (allowed[j] && cost[j].sign() < 0) { pc = j; break; }
      if (pc == cols()) return LpStatus::Optimal;
      size_t pr = rows();
      Rat best;
      for (size_t i = 0; i < rows(); ++i) {
        if (a[i][pc].sign() <= 0) continue;
        Rat ratio = rhs[i] / a[i][pc];
        if (pr == rows() || ratio < best || (ratio == best && basis[i] < basis[pr])) {
          pr = i;
          best = ratio;
        }
      }
      if (pr == rows()) return LpStatus::Unbounded;
      pivot(pr, pc);
    }
  }
};

} // namespace

SimplexResult simplex_solve(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                            const std::vector<Rat>& c) {
  size_t m = A.size();
  size_t n = m ? A[0].size() : c.size();
  Tableau t;
  t.a.assign(m, std::vector<Rat>(n + m));
  t.rhs.resize(m);
  t.basis.resize(m);
  for (size_t i = 0; i < m; ++i) {
    int s = b[i].sign() < 0 ? -1 : 1;
    for (size_t j = 0; j < n; ++j) t.a[i][j] = Rat(s) * A[i][j];
    t.rhs[i] = Rat(s) * b[i];
    t.a[i][n + i] = Rat(1); // artificial
    t.basis[i] = n + i;
  }

  // phase 1: minimize the sum of artificials
  t.cost.assign(n + m, Rat(0));
  t.obj = Rat(0);
  for (size_t j = n; j < n + m; ++j) t.cost[j] = Rat(1);
  for (size_t i = 0; i < m; ++i) { // price out the artificial basis
    for (size_t j = 0; j < n + m; ++j) t.cost[j] -= t.a[i][j];
    t.obj -= t.rhs[i];
  }
  std::vector<bool> allowed(n + m, true);
  t.run(allowed);
  if (!(-t.obj).is_zero()) return {LpStatus::Infeasible, Rat(0), {}};

  // drive remaining artificials out of the basis; rows that cannot be
  // repaired are redundant and get dropped
  for (size_t i = 0; i < t.rows();) {
    if (t.basis[i] < n) { ++i; continue; }
    size_t pc = n;
    for (size_t j = 0; j < n; ++j)
      if (!t.a[i][j].is_zero()) { pc = j; break; }
    if (pc < n) {
      t.pivot(i, pc);
      ++i;
    } else {
      t.a.erase(t.a.begin() + i);
      t.rhs.erase(t.rhs.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }

  // phase 2
  size_t total = t.cols();
  for (size_t j = n; j < total; ++j) allowed[j] = false;
  t.cost.assign(total, Rat(0));
  t.obj = Rat(0);
  for (size_t j = 0; j < n; ++j) t.cost[j] = c[j];
  for (size_t i = 0; i < t.rows(); ++i) {
    size_t bj = t.basis[i];
    if (bj >= n || t.cost[bj].is_zero()) continue;
    Rat f = t.cost[bj];
    for (size_t j = 0; j < total; ++j) t.cost[j] -= f * t.a[i][j];
    t.obj -= f * t.rhs[i];
  }
  LpStatus st = t.run(allowed);
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};

  SimplexResult res;
  res.status = LpStatus::Optimal;
  res.x.assign(n, Rat(0));
  for (size_t i = 0; i < t.rows(); ++i)
    if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs[i];
  for (size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

} // namespace torimult
