#include <benchmark/benchmark.h>

#include "hbk/emknot.hpp"
#include "hbk/invariants.hpp"
#include "hbk/projrat.hpp"
#include "hbk/verify.hpp"

namespace {

void BM_cf_eval(benchmark::State& state) {
  std::vector<long long> coeffs;
  for (long long i = 0; i < state.range(0); ++i) coeffs.push_back((i % 7) - 3);
  for (auto _ : state) benchmark::DoNotOptimize(hbk::cf_eval(coeffs));
}
BENCHMARK(BM_cf_eval)->Arg(8)->Arg(64);

void BM_characteristic_slopes(benchmark::State& state) {
  hbk::HandlebodyKnot knot(hbk::Side::Right, {5, 3, 2, 0});
  for (auto _ : state) benchmark::DoNotOptimize(hbk::characteristic_slopes(knot));
}
BENCHMARK(BM_characteristic_slopes);

void BM_box_enumeration(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(hbk::valid_params_in_box(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_box_enumeration)->Arg(4)->Arg(8);

void BM_verify_lemmas(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(hbk::verify_lemmas(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_verify_lemmas)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_collision_search(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(hbk::collision_search(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_collision_search)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
