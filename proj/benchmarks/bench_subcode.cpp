#include <benchmark/benchmark.h>

#include <random>

#include "subcode/lattice.hpp"
#include "subcode/search.hpp"

using namespace subcode;

namespace {

std::vector<Vector> random_rows(const Field& f, int n, int rows, std::mt19937& rng) {
  std::vector<Vector> out(rows, Vector(n));
  for (auto& r : out)
    for (auto& x : r) x = static_cast<Elem>(rng() % f->q());
  return out;
}

void BM_RowReduce(benchmark::State& state) {
  const Field f = field_of_order(static_cast<int>(state.range(0)));
  std::mt19937 rng(1);
  const auto rows = random_rows(f, 6, 6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(Subspace::span(f, 6, rows));
}
BENCHMARK(BM_RowReduce)->Arg(2)->Arg(3)->Arg(9);

void BM_Intersect(benchmark::State& state) {
  const Field f = field_of_order(static_cast<int>(state.range(0)));
  std::mt19937 rng(2);
  const Subspace x = Subspace::span(f, 6, random_rows(f, 6, 3, rng));
  const Subspace y = Subspace::span(f, 6, random_rows(f, 6, 4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(intersect(x, y));
}
BENCHMARK(BM_Intersect)->Arg(2)->Arg(3)->Arg(9);

void BM_EnumerateProjective(benchmark::State& state) {
  const Field f = make_field(2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_projective_space(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateProjective)->DenseRange(3, 6);

void BM_ProjectiveLattice(benchmark::State& state) {
  const Field f = make_field(2);
  for (auto _ : state) benchmark::DoNotOptimize(profile(build_projective_lattice(f, 4).lattice));
}
BENCHMARK(BM_ProjectiveLattice)->Unit(benchmark::kMillisecond);

void BM_TableSearchCoordinate(benchmark::State& state) {
  const SubspaceCode code = coordinate_code(make_field(2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(complete_addition_table(code.words()));
}
BENCHMARK(BM_TableSearchCoordinate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SearchMaxLinear(benchmark::State& state) {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.max_words = 8;
  for (auto _ : state) benchmark::DoNotOptimize(search_max_linear_code(cfg));
}
BENCHMARK(BM_SearchMaxLinear)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
