#include <benchmark/benchmark.h>

#include <vector>

#include "binsum/binomial.hpp"
#include "binsum/engine.hpp"
#include "binsum/identities.hpp"
#include "binsum/sequences.hpp"
#include "binsum/special_numbers.hpp"

namespace {

void BM_SequenceTermS(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(binsum::seq_S(n, 2));
  }
}
BENCHMARK(BM_SequenceTermS)->Arg(50)->Arg(100)->Arg(200);

void BM_SequenceTermR(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(binsum::seq_R(n));
  }
}
BENCHMARK(BM_SequenceTermR)->Arg(50)->Arg(150);

// Full incremental accumulation of sum_{k<n} S_k^(2), the inner loop of
// the theorem sweeps.
void BM_PrefixSweepS(benchmark::State& state) {
  const long n_max = state.range(0);
  for (auto _ : state) {
    binsum::PrefixAccumulator acc({binsum::Family::S, 2, 0}, binsum::Weight::None);
    for (long n = 0; n < n_max; ++n) acc.advance();
    benchmark::DoNotOptimize(acc.sum());
  }
}
BENCHMARK(BM_PrefixSweepS)->Arg(100)->Arg(200);

void BM_UTermRow(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    binsum::Integer total(0);
    for (long j = 0; j < n; ++j) total += binsum::u_term(n, j);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_UTermRow)->Arg(60)->Arg(120);

void BM_VerifyThm11(benchmark::State& state) {
  const auto* claim = binsum::find_claim("thm1.1");
  binsum::SweepRanges ranges{state.range(0), 2, 10};
  for (auto _ : state) {
    benchmark::DoNotOptimize(binsum::verify_claim(*claim, ranges, 1));
  }
}
BENCHMARK(BM_VerifyThm11)->Arg(50)->Arg(100);

void BM_IdentitySweep(benchmark::State& state) {
  binsum::IdentityRanges ranges;
  ranges.n_max = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(binsum::sweep_identity("eq1.8", ranges, 1));
  }
}
BENCHMARK(BM_IdentitySweep)->Arg(10)->Arg(20);

void BM_LegendreSweep(benchmark::State& state) {
  const auto primes = binsum::primes_up_to(state.range(0));
  for (auto _ : state) {
    int acc = 0;
    for (long p : primes) {
      if (p == 2 || p == 5) continue;
      acc += binsum::legendre_symbol(binsum::Integer(5), p);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_LegendreSweep)->Arg(500)->Arg(2000);

void BM_BernoulliRecurrence(benchmark::State& state) {
  const long m = state.range(0);
  for (auto _ : state) {
    // rebuilt from scratch each iteration, bypassing the shared table
    std::vector<binsum::Rational> values;
    values.emplace_back(1);
    for (long i = 1; i <= m; ++i) {
      binsum::Rational sum;
      for (long j = 0; j < i; ++j) {
        sum += binsum::Rational(binsum::binomial(binsum::Integer(i + 1), j)) *
               values[static_cast<std::size_t>(j)];
      }
      values.push_back(-(sum / binsum::Rational(i + 1)));
    }
    benchmark::DoNotOptimize(values.back());
  }
}
BENCHMARK(BM_BernoulliRecurrence)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
