#include "torimult/multiplier.hpp"
#include "torimult/singularity.hpp"

#include <benchmark/benchmark.h>

using namespace torimult;

namespace {

NVec nv(std::initializer_list<long> xs) { return NVec(xs); }
MVec mv(std::initializer_list<long> xs) { return MVec(xs); }

AffineToricVariety quadric() {
  return AffineToricVariety(NCone({nv({1, 0}), nv({1, 2})}, 2));
}

AffineToricVariety cyclic(long p, long q) {
  return AffineToricVariety(NCone({nv({1, 0}), nv({q, p})}, 2));
}

void BM_lp_min(benchmark::State& state) {
  auto X = quadric();
  auto P = section_polyhedron(X, TWeilDivisor({Rat(1), Rat(-2)}));
  NVec w = nv({3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(P.lp_min(w).value);
}
BENCHMARK(BM_lp_min);

void BM_min_generators(benchmark::State& state) {
  auto X = quadric();
  auto P = section_polyhedron(X, TWeilDivisor({Rat(-2), Rat(-3)}));
  for (auto _ : state) benchmark::DoNotOptimize(P.min_generators().size());
}
BENCHMARK(BM_min_generators);

void BM_hilbert_basis(benchmark::State& state) {
  auto c = NCone({nv({1, 0}), nv({long(state.range(0) - 1), long(state.range(0))})}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(c).size());
}
BENCHMARK(BM_hilbert_basis)->Arg(5)->Arg(9)->Arg(12);

void BM_resolve_cyclic(benchmark::State& state) {
  auto X = cyclic(state.range(0), state.range(0) - 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(resolve(FanRefinement::identity(X)).ray_count());
}
BENCHMARK(BM_resolve_cyclic)->Arg(5)->Arg(9)->Arg(12);

void BM_mult_ideal_cusp(benchmark::State& state) {
  AffineToricVariety X(NCone({nv({1, 0}), nv({0, 1})}, 2));
  PairSpec P(X, {PairTerm{Rat(5, 6), MonomialFractionalIdeal({mv({2, 0}), mv({0, 3})}, X)}});
  for (auto _ : state) benchmark::DoNotOptimize(mult_ideal(P).first.gens().size());
}
BENCHMARK(BM_mult_ideal_cusp);

void BM_classify_can_quadric(benchmark::State& state) {
  auto X = quadric();
  PairSpec P(X, {PairTerm{Rat(1), TWeilDivisor({Rat(1), Rat(0)})}});
  for (auto _ : state) benchmark::DoNotOptimize(classify_can(P).can_level);
}
BENCHMARK(BM_classify_can_quadric);

} // namespace

BENCHMARK_MAIN();
