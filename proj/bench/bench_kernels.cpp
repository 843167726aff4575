#include <benchmark/benchmark.h>

#include "pdg/kernels.hpp"
#include "pdg/weight_system.hpp"

using namespace pdg;

namespace {

const std::vector<ChordDiagram>& diagrams(int n) {
  static std::vector<std::vector<ChordDiagram>> cache(9);
  if (cache[n].empty()) cache[n] = kernels::serial::enumerate_diagrams(n);
  return cache[n];
}

std::vector<DiagramQuadruple> quadruples(int n) {
  std::vector<DiagramQuadruple> out;
  for (const auto& q : generate_4T_quadruples(n)) out.push_back(q.diagrams);
  return out;
}

// Chord i joins positions i and i + n: every pair of chords interlaces.
CombinatorialMap complete_bouquet(int n) {
  std::vector<int> word(2 * n);
  for (int i = 0; i < n; ++i) word[i] = word[i + n] = i + 1;
  return to_map(ChordDiagram::from_word(word));
}

template <class Fn>
void genus_polynomials(benchmark::State& state, Fn fn) {
  const auto& all = diagrams(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fn(all, GenusPath::Fast));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}

void BM_GenusPolynomials_Serial(benchmark::State& state) {
  genus_polynomials(state, [](auto& d, auto p) { return kernels::serial::genus_polynomials(d, p); });
}
void BM_GenusPolynomials_OpenMP(benchmark::State& state) {
  genus_polynomials(state, [](auto& d, auto p) { return kernels::omp::genus_polynomials(d, p); });
}

void BM_SingleMap_Serial(benchmark::State& state) {
  const auto m = complete_bouquet(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::genus_polynomial(m));
}
void BM_SingleMap_OpenMP(benchmark::State& state) {
  const auto m = complete_bouquet(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::genus_polynomial(m));
}

void BM_Enumerate_Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::enumerate_diagrams(static_cast<int>(state.range(0))));
}
void BM_Enumerate_OpenMP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::enumerate_diagrams(static_cast<int>(state.range(0))));
}

const DiagramInvariant kGamma = [](const ChordDiagram& d) { return pd_genus_polynomial(d); };

void BM_AlternatingSums_Serial(benchmark::State& state) {
  const auto quads = quadruples(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::alternating_sums(quads, kGamma));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(quads.size()));
}
void BM_AlternatingSums_OpenMP(benchmark::State& state) {
  const auto quads = quadruples(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::alternating_sums(quads, kGamma));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(quads.size()));
}

}  // namespace

BENCHMARK(BM_GenusPolynomials_Serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenusPolynomials_OpenMP)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingleMap_Serial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingleMap_OpenMP)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate_Serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate_OpenMP)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlternatingSums_Serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlternatingSums_OpenMP)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
