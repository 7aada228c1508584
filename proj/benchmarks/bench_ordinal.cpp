#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ordinal/arith.hpp"
#include "ordinal/compare.hpp"
#include "ordinal/kernel.hpp"
#include "ordinal/mlseq.hpp"
#include "ordinal/oracle.hpp"
#include "ordinal/trees.hpp"

using namespace ordinal;

namespace {

std::vector<std::pair<Name, Name>> finitary_pairs(std::uint32_t depth, std::size_t n) {
  std::mt19937_64 rng(1);
  oracle::GenParams p{depth, 3, 0.0, 0};
  std::vector<std::pair<Name, Name>> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(oracle::gen_name(p, rng), oracle::gen_name(p, rng));
  return out;
}

void BM_FinitaryLe(benchmark::State& state) {
  auto pairs = finitary_pairs(static_cast<std::uint32_t>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    clear_memo();
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(le(a, {b}));
  }
}
BENCHMARK(BM_FinitaryLe)->DenseRange(2, 5);

void BM_NaiveLe(benchmark::State& state) {
  auto pairs = finitary_pairs(static_cast<std::uint32_t>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    oracle::clear_naive_memo();
    const auto& [a, b] = pairs[i++ % pairs.size()];
    std::vector<Name> bs{b};
    benchmark::DoNotOptimize(oracle::naive_le(a, bs));
  }
}
BENCHMARK(BM_NaiveLe)->DenseRange(2, 4);

void BM_OmegaLtWidth(benchmark::State& state) {
  Name w = omega(), ww = add(omega(), omega());
  Fuel f{static_cast<std::uint64_t>(state.range(0)), 512};
  for (auto _ : state) {
    clear_memo();
    benchmark::DoNotOptimize(lt(w, {ww}, f));
  }
}
BENCHMARK(BM_OmegaLtWidth)->RangeMultiplier(4)->Range(8, 512);

void BM_OpaqueLpoWidth(benchmark::State& state) {
  LpoNames n = eps_lpo(BitSeq::opaque_last({0, 0, 1}));
  Fuel f{static_cast<std::uint64_t>(state.range(0)), 512};
  for (auto _ : state) {
    clear_memo();
    benchmark::DoNotOptimize(lt(n.eps, {n.eps_prime}, f));
  }
}
BENCHMARK(BM_OpaqueLpoWidth)->RangeMultiplier(4)->Range(8, 512);

void BM_ProveOmegaTimesTwo(benchmark::State& state) {
  Name a = mul(omega(), und(2)), b = add(omega(), omega());
  for (auto _ : state) {
    clear_memo();
    benchmark::DoNotOptimize(prove(Judgment(Rel::Le, a, {b})));
  }
}
BENCHMARK(BM_ProveOmegaTimesTwo)->Unit(benchmark::kMillisecond);

void BM_MlProve(benchmark::State& state) {
  auto pairs = finitary_pairs(3, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(ml_prove({Atom{a, Rel::Lt, b}, Atom{b, Rel::Le, a}}));
  }
}
BENCHMARK(BM_MlProve);

void BM_EnumerateOmegaPlusOmega(benchmark::State& state) {
  Name ww = add(omega(), omega());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(ww, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateOmegaPlusOmega)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
