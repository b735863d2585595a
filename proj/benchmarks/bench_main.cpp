#include <benchmark/benchmark.h>

#include <random>

#include "kmss/gcm.hpp"
#include "kmss/linalg.hpp"
#include "kmss/sseq.hpp"
#include "kmss/system.hpp"
#include "kmss/tits.hpp"
#include "kmss/weyl.hpp"

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

const Rows kB3 = {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
const Rows kAffine = {{2, -2}, {-2, 2}};
const Rows kRank3 = {{2, -1, -2}, {-1, 2, -2}, {-2, -2, 2}};

kmss::KacMoodySystem system_of(const Rows& rows) {
  return kmss::KacMoodySystem::build(kmss::GCM::validate(rows));
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 gen(7);
  std::uniform_int_distribution<long> entry(-20, 20);
  kmss::ZMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(gen);
  for (auto _ : state) benchmark::DoNotOptimize(kmss::linalg::smith_invariants(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateB3(benchmark::State& state) {
  const auto a = kmss::GCM::validate(kB3);
  const auto r = kmss::realization(a);
  for (auto _ : state) benchmark::DoNotOptimize(kmss::enumerate_group(r, a.full_set(), kmss::kDefaultGroupCap));
}
BENCHMARK(BM_EnumerateB3);

void BM_CosetRepsRank3(benchmark::State& state) {
  const auto a = kmss::GCM::validate(kRank3);
  const auto r = kmss::realization(a);
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kmss::min_coset_reps(r, 0, len));
}
BENCHMARK(BM_CosetRepsRank3)->Arg(6)->Arg(10);

void BM_E2Affine(benchmark::State& state) {
  const auto s = system_of(kAffine);
  const auto j = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kmss::e2_page(s, 3, j));
}
BENCHMARK(BM_E2Affine)->Arg(12)->Arg(24);

void BM_TitsRank3(benchmark::State& state) {
  const auto s = system_of(kRank3);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kmss::tits_acyclicity(s, k, kmss::Coefficients::integers()));
}
BENCHMARK(BM_TitsRank3)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
