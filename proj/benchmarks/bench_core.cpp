#include <benchmark/benchmark.h>

#include "mae/integrals.hpp"
#include "mae/monge_ampere.hpp"
#include "mae/parser.hpp"
#include "mae/random_models.hpp"
#include "mae/symbol_cone.hpp"

namespace {

using namespace mae;

void BM_BuildED(benchmark::State& state) {
  Sampler s(1);
  const Distribution d = random_vertical_rank1(s);
  for (auto _ : state) benchmark::DoNotOptimize(build_ED(d));
}
BENCHMARK(BM_BuildED);

void BM_QuasilinearFormula(benchmark::State& state) {
  Sampler s(2);
  const auto nf = random_quasilinear_normal_form(s);
  for (auto _ : state) benchmark::DoNotOptimize(quasilinear_coefficients(nf.h, nf.x, nf.y).reconstruct());
}
BENCHMARK(BM_QuasilinearFormula);

void BM_ConeSample(benchmark::State& state) {
  const MultiPoly f = parse_expr("p111 - p112 - 2*p122");
  for (auto _ : state) benchmark::DoNotOptimize(cone_sample(f, JetPoint::zero(1), kDefaultSeed));
}
BENCHMARK(BM_ConeSample);

void BM_DetectGoursat(benchmark::State& state) {
  const MultiPoly f = parse_expr("p111 - p112 - 2*p122");
  for (auto _ : state) benchmark::DoNotOptimize(detect_goursat(f));
}
BENCHMARK(BM_DetectGoursat);

void BM_Recover(benchmark::State& state) {
  Sampler s(3);
  const MultiPoly f = build_ED(random_vertical_rank1(s));
  for (auto _ : state) benchmark::DoNotOptimize(recover_distribution(f));
}
BENCHMARK(BM_Recover);

void BM_SearchFirstIntegrals(benchmark::State& state) {
  Sampler s(4);
  const Distribution d = random_vertical_rank2(s);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_first_integrals(d, degree));
}
BENCHMARK(BM_SearchFirstIntegrals)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
