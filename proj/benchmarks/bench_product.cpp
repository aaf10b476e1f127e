#include "sl2dist/product.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace sl2dist;

namespace {

template <class R>
Element<R> random_element(const R& ring, std::mt19937& rng, unsigned nterms,
                          unsigned amax, unsigned bmax, unsigned cmax) {
  std::uniform_int_distribution<unsigned> da(0, amax), db(0, bmax), dc(0, cmax);
  std::uniform_int_distribution<long> dcoef(-9, 9);
  Element<R> out(ring);
  for (unsigned i = 0; i < nterms; ++i)
    out.add_term(Monomial{da(rng), db(rng), dc(rng)}, ring.from_long(dcoef(rng)));
  return out;
}

void BM_mul_fp(benchmark::State& state) {
  RingFp F5(5);
  std::mt19937 rng(17);
  unsigned n = static_cast<unsigned>(state.range(0));
  auto x = random_element(F5, rng, n, 30, 20, 30);
  auto y = random_element(F5, rng, n, 30, 20, 30);
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
}
BENCHMARK(BM_mul_fp)->Arg(4)->Arg(16)->Arg(64);

void BM_mul_z(benchmark::State& state) {
  RingZ Z{};
  std::mt19937 rng(17);
  unsigned n = static_cast<unsigned>(state.range(0));
  auto x = random_element(Z, rng, n, 30, 20, 30);
  auto y = random_element(Z, rng, n, 30, 20, 30);
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
}
BENCHMARK(BM_mul_z)->Arg(4)->Arg(16);

void BM_mul_reference_fp(benchmark::State& state) {
  RingFp F5(5);
  std::mt19937 rng(17);
  unsigned n = static_cast<unsigned>(state.range(0));
  auto x = random_element(F5, rng, n, 30, 20, 30);
  auto y = random_element(F5, rng, n, 30, 20, 30);
  for (auto _ : state) benchmark::DoNotOptimize(mul_reference(x, y));
}
BENCHMARK(BM_mul_reference_fp)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
