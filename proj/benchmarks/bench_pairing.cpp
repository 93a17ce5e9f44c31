#include <benchmark/benchmark.h>

#include "fcs/coherent.hpp"
#include "fcs/iso.hpp"
#include "fcs/padic_fn.hpp"
#include "fcs/random.hpp"

using namespace fcs;

namespace {

void BM_x_disk_coefficients(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  const int depth = static_cast<int>(state.range(1));
  const Word I = Word::from_index(p, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(x_disk_coefficients(I, depth));
}
BENCHMARK(BM_x_disk_coefficients)->Args({2, 6})->Args({3, 6})->Args({5, 5});

void BM_pairing_disk_route(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  SeededRng rng(1);
  const DiskCoefficients psi = random_cascade(p, 6, rng);
  const XCombination phi = XCombination::single(random_word(p, 4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(renormalized_pairing(psi, phi));
}
BENCHMARK(BM_pairing_disk_route)->Arg(2)->Arg(3)->Arg(5);

void BM_pairing_fock_route(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  const int len = static_cast<int>(state.range(1));
  SeededRng rng(2);
  const Word I = random_word(p, static_cast<std::size_t>(len), rng);
  const FockVector psi = build_x(I, len + 1);
  const XCombination phi = XCombination::single(I);
  for (auto _ : state) benchmark::DoNotOptimize(renormalized_pairing(psi, phi));
}
BENCHMARK(BM_pairing_fock_route)->Args({2, 2})->Args({2, 4})->Args({3, 3});

void BM_build_x(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  const int depth = static_cast<int>(state.range(1));
  const Word I(p, {0});
  for (auto _ : state) benchmark::DoNotOptimize(build_x(I, depth));
}
BENCHMARK(BM_build_x)->Args({2, 6})->Args({2, 10})->Args({3, 6});

void BM_eigen_residual(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  SeededRng rng(3);
  const FockVector v = fcs_to_fock(random_cascade(p, static_cast<int>(state.range(1)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(eigen_residual(v));
}
BENCHMARK(BM_eigen_residual)->Args({2, 6})->Args({3, 4});

void BM_l2_gram_entry(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  SeededRng rng(4);
  const TestFunction f = phi(random_combination(p, 4, 6, rng), 4);
  const TestFunction g = phi(random_combination(p, 4, 6, rng), 4);
  for (auto _ : state) benchmark::DoNotOptimize(l2_inner(f, g));
}
BENCHMARK(BM_l2_gram_entry)->Arg(2)->Arg(3)->Arg(5);

void BM_gf_pair_delta(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  SeededRng rng(5);
  const GeneralizedFunction u = gf_delta(random_point(p, 5, rng), 5);
  const TestFunction f = random_test_function(p, 5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gf_pair(u, f));
}
BENCHMARK(BM_gf_pair_delta)->Arg(2)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
