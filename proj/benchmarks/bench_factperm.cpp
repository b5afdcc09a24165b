// Microbenchmarks for the hot paths: based-map factorization scans, twisted
// arrow materialization, Smith normal form, algebra family construction, and
// the truncated total-category build.

#include <benchmark/benchmark.h>

#include "factperm/factop.hpp"
#include "factperm/fincat.hpp"
#include "factperm/finstar.hpp"
#include "factperm/permconstr.hpp"
#include "factperm/sset.hpp"
#include "support/fixtures.hpp"

using namespace factperm;

static void BM_factorize_exhaustive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int m = 0; m <= n; ++m)
      for (const auto& f : finstar::all_maps(n, m))
        benchmark::DoNotOptimize(finstar::factorize(f));
  }
}
BENCHMARK(BM_factorize_exhaustive)->Arg(3)->Arg(4);

static void BM_twisted_arrow(benchmark::State& state) {
  auto c = fixtures::indiscrete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fincat::twisted_arrow(c));
}
BENCHMARK(BM_twisted_arrow)->Arg(2)->Arg(3);

static void BM_comma_probe(benchmark::State& state) {
  auto c = fixtures::indiscrete(2);
  for (auto _ : state) benchmark::DoNotOptimize(fincat::comma_probe(c, 0));
}
BENCHMARK(BM_comma_probe);

static void BM_smith_normal_form(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<long long> m(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i) * n + j] = (i * 7 + j * 3) % 5 - 2;
  for (auto _ : state) {
    auto copy = m;
    benchmark::DoNotOptimize(sset::smith_normal_form(std::move(copy), n, n));
  }
}
BENCHMARK(BM_smith_normal_form)->Arg(16)->Arg(48);

static void BM_nerve_homology(benchmark::State& state) {
  auto c = fixtures::indiscrete(2);
  for (auto _ : state) {
    sset::TruncatedSSet x = sset::nerve_truncate(*c, 2);
    benchmark::DoNotOptimize(sset::homology(x));
  }
}
BENCHMARK(BM_nerve_homology);

static void BM_fact_family(benchmark::State& state) {
  auto fx = fixtures::z2();
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factop::build_fact_family(fx, bound));
}
BENCHMARK(BM_fact_family)->Arg(2)->Arg(3);

static void BM_perm_build(benchmark::State& state) {
  auto fx = fixtures::z2();
  factop::FactFamily fam = factop::build_fact_family(fx, 2);
  permconstr::TruncatedSegalFunctor f = permconstr::fact_functor(fam, false, 0);
  for (auto _ : state) benchmark::DoNotOptimize(permconstr::perm_build(f, 2));
}
BENCHMARK(BM_perm_build);

static void BM_validate_total(benchmark::State& state) {
  auto fx = fixtures::indiscrete2();
  factop::FactFamily fam = factop::build_fact_family(fx, 2);
  permconstr::TruncatedSegalFunctor f = permconstr::fact_functor(fam, false, 0);
  permconstr::PermBuild pb = permconstr::perm_build(f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(permcat::validate_permutative(*pb.perm));
}
BENCHMARK(BM_validate_total);

BENCHMARK_MAIN();
