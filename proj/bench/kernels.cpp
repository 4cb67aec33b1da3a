// Serial reference paths against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "stewart/bounds.hpp"
#include "stewart/cyclotomic.hpp"
#include "stewart/splitprimes.hpp"

using namespace stewart;

namespace {

void sieve(benchmark::State& state, int threads) {
  for (auto _ : state) {
    std::size_t count = 0;
    const SplitPrimeSink sink = [&](std::span<const std::uint64_t> primes, std::uint64_t) {
      count += primes.size();
      return true;
    };
    if (threads == 1) {
      sieve_split_primes_serial(0, 200'000'000, SieveConfig{}, sink);
    } else {
      sieve_split_primes(0, 200'000'000, SieveConfig{}, sink);
    }
    benchmark::DoNotOptimize(count);
  }
}

void k_scan(benchmark::State& state, int threads) {
  const SplitPrimeTable table = enumerate_split_primes_upto(999);
  for (auto _ : state) {
    benchmark::DoNotOptimize(n0_optimize(1000, OptimizeOptions{std::nullopt, kDefaultPrecision, threads}, table).n0);
  }
}

void schwarz(benchmark::State& state, int threads) {
  for (auto _ : state) {
    const SchwarzReport r =
        threads == 1 ? schwarz_bound_check_serial(10000) : schwarz_bound_check(10000, kDefaultPrecision, threads);
    benchmark::DoNotOptimize(r.argmax);
  }
}

void qk_verify(benchmark::State& state, int threads) {
  for (auto _ : state) {
    const QkReport r = verify_qk_bound({500000, 2000000, "1.3"}, SieveConfig{std::uint64_t{1} << 20, threads});
    benchmark::DoNotOptimize(r.pass);
  }
}

}  // namespace

BENCHMARK_CAPTURE(sieve, serial, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sieve, parallel, 0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(k_scan, serial, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(k_scan, parallel, 0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(schwarz, serial, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(schwarz, parallel, 0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(qk_verify, serial, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(qk_verify, parallel, 0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
