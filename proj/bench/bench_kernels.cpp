// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "hopfelim/elimination.hpp"
#include "hopfelim/random.hpp"

using namespace hopfelim;

namespace {

const MixedAlgebra& algebra() {
  static const MixedAlgebra alg({"v1", "v2"}, {"w1", "w2"});
  return alg;
}

MixedElement sample(int degree, int terms) {
  RandomElements rnd(1234);
  const auto letters = all_letters(*algebra().alphabet());
  return rnd.element(algebra().alphabet(), letters, degree, terms);
}

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_MapI(benchmark::State& state) {
  const MixedElement x = sample(9, 200);
  for (auto _ : state) benchmark::DoNotOptimize(map_I(algebra(), x, mode(state)));
  state.SetLabel(mode(state) == Exec::serial ? "serial" : "parallel");
}

void BM_MapJ(benchmark::State& state) {
  const MixedElement x = sample(9, 200);
  for (auto _ : state) benchmark::DoNotOptimize(map_J(algebra(), x, mode(state)));
  state.SetLabel(mode(state) == Exec::serial ? "serial" : "parallel");
}

void BM_Coproduct(benchmark::State& state) {
  const MixedElement x = sample(10, 200);
  for (auto _ : state) benchmark::DoNotOptimize(coproduct(x, mode(state)));
  state.SetLabel(mode(state) == Exec::serial ? "serial" : "parallel");
}

void BM_NormalForm(benchmark::State& state) {
  const MixedElement x = sample(8, 200);
  for (auto _ : state) benchmark::DoNotOptimize(smash_normal_form(algebra(), x, mode(state)));
  state.SetLabel(mode(state) == Exec::serial ? "serial" : "parallel");
}

void BM_Dimensions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bigraded_dimension_audit(2, 2, 9, mode(state)));
  state.SetLabel(mode(state) == Exec::serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_MapI)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MapJ)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Coproduct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalForm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dimensions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
