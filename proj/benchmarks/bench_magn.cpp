#include <benchmark/benchmark.h>

#include "magn/element.hpp"
#include "magn/hopf.hpp"
#include "magn/prim.hpp"
#include "magn/tree.hpp"

namespace {

const magn::ArityBound kBin = magn::ArityBound::finite(2);
const magn::ArityBound kOmega = magn::ArityBound::omega();

void BM_EnumerateShapes(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(magn::enumerate_shapes(n, kOmega));
}
BENCHMARK(BM_EnumerateShapes)->DenseRange(4, 8, 2);

void BM_Coproduct(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<magn::Tree> basis = magn::multilinear_basis(n, kBin);
  magn::Element e(kBin);
  for (std::size_t i = 0; i < basis.size(); i += 7) e.add_term(basis[i], 1);
  for (auto _ : state) benchmark::DoNotOptimize(magn::coproduct(e));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * e.size()));
}
BENCHMARK(BM_Coproduct)->DenseRange(3, 6);

void BM_Shuffle(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  magn::Tree t1 = magn::multilinear_basis(n, kBin).front();
  magn::Tree t2 = magn::relabel_leaves(t1, std::vector<magn::Label>(n, 9));
  for (auto _ : state) benchmark::DoNotOptimize(magn::shuffle(t1, t2, kBin));
}
BENCHMARK(BM_Shuffle)->DenseRange(1, 3);

void BM_PrimitiveBasis(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(magn::primitive_basis_multilinear(n, kBin));
}
BENCHMARK(BM_PrimitiveBasis)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_PrimitiveDimension(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(magn::primitive_dimension_multilinear(n, kBin));
}
BENCHMARK(BM_PrimitiveDimension)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
