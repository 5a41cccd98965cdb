#include <benchmark/benchmark.h>

#include "svdt/families.hpp"
#include "svdt/graph.hpp"
#include "svdt/sqrt_ops.hpp"
#include "svdt/sv_ops.hpp"
#include "svdt/symfunc.hpp"

using namespace svdt;

namespace {

void BM_EnumerateDecTab(benchmark::State& state) {
  StrictPartition lam({3, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_family(FamilyId::DecTab, lam, 4));
}
BENCHMARK(BM_EnumerateDecTab);

void BM_EnumerateSetDecTab(benchmark::State& state) {
  StrictPartition lam({2, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_family(FamilyId::SetDecTab, lam, 3, 5));
}
BENCHMARK(BM_EnumerateSetDecTab);

void BM_SvOperatorSweep(benchmark::State& state) {
  StrictPartition lam({2, 1});
  const auto members = enumerate_family(FamilyId::SetDecTab, lam, 3, 5);
  for (auto _ : state)
    for (const auto& t : members)
      for (int i = 1; i <= 2; ++i)
        for (Dir dir : {Dir::raise, Dir::lower}) benchmark::DoNotOptimize(sv_op(t, i, dir));
}
BENCHMARK(BM_SvOperatorSweep);

void BM_SqrtOperatorSweep(benchmark::State& state) {
  StrictPartition lam({2, 1});
  const auto members = enumerate_family(FamilyId::SetDecTab, lam, 3, 5);
  for (auto _ : state)
    for (const auto& t : members)
      for (int i = 1; i <= 2; ++i)
        for (Dir dir : {Dir::raise, Dir::lower}) benchmark::DoNotOptimize(sqrt_op(t, i, dir));
}
BENCHMARK(BM_SqrtOperatorSweep);

void BM_SchurP(benchmark::State& state) {
  StrictPartition lam({3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(basis_poly(BasisKind::P, lam, 5, 5));
}
BENCHMARK(BM_SchurP);

void BM_KTheorySchurP(benchmark::State& state) {
  StrictPartition lam({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(basis_poly(BasisKind::GP, lam, 5, 5));
}
BENCHMARK(BM_KTheorySchurP);

void BM_BuildQueerGraph(benchmark::State& state) {
  StrictPartition lam({2});
  std::vector<std::string> keys;
  for (const auto& t : enumerate_family(FamilyId::SetDecTab, lam, 3, 5))
    keys.push_back(t.serialize());
  for (auto _ : state)
    benchmark::DoNotOptimize(CrystalGraph::build(keys, sv_family(3, true)));
}
BENCHMARK(BM_BuildQueerGraph);

void BM_GpExpand(benchmark::State& state) {
  TruncPoly sigma = basis_poly(BasisKind::Sigma, StrictPartition({2, 1}), 5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(gp_expand(sigma));
}
BENCHMARK(BM_GpExpand);

}  // namespace

BENCHMARK_MAIN();
