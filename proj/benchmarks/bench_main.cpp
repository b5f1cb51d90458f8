#include <benchmark/benchmark.h>

#include "zhodge/motivic.hpp"
#include "zhodge/random.hpp"

using namespace zhodge;

static void BM_RingMul(benchmark::State& state) {
  Rng rng(1);
  ElementParams params;
  params.max_terms = static_cast<unsigned>(state.range(0));
  RingElement a, b;
  while (a.terms().size() < params.max_terms / 2) a = random_element(rng, params);
  while (b.terms().size() < params.max_terms / 2) b = random_element(rng, params);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RingMul)->Arg(4)->Arg(16)->Arg(64);

static void BM_ThreeWayProduct(benchmark::State& state) {
  Rng rng(2);
  ProfileParams params;
  const auto x = random_profile_of_dim(rng, params, 4, "X");
  const auto y = random_profile_of_dim(rng, params, 4, "Y");
  for (auto _ : state) {
    benchmark::DoNotOptimize(integral_hodge(x) * integral_hodge(y));
    benchmark::DoNotOptimize(product_hz_direct(x, y));
    benchmark::DoNotOptimize(integral_hodge(kunneth_product_profile(x, y)));
  }
}
BENCHMARK(BM_ThreeWayProduct);

static void BM_HVirPower(benchmark::State& state) {
  Rng rng(3);
  ProfileParams params;
  const auto x = VirtualClass::of(random_profile_of_dim(rng, params, 2, "X"));
  const auto cls = power(x - VirtualClass::lefschetz(-1), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h_vir(cls));
}
BENCHMARK(BM_HVirPower)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK_MAIN();
