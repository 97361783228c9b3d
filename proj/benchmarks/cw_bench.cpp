#include <benchmark/benchmark.h>

#include <vector>

#include "cw/exact/cyclotomic.hpp"
#include "cw/fermat/fermat.hpp"
#include "cw/group/character_table.hpp"
#include "cw/modular/modular.hpp"
#include "cw/psl2/psl2fp.hpp"

using namespace cw;

namespace {

exact::Cyclotomic dense_element(std::uint32_t n, std::int64_t shift) {
  exact::Cyclotomic x = exact::Cyclotomic::root_of_unity(n, 0);
  for (std::uint32_t k = 1; k < n; ++k) x += exact::Cyclotomic::root_of_unity(n, k * shift) * exact::Cyclotomic::root_of_unity(n, k);
  return x;
}

void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto a = dense_element(n, 1);
  const auto b = dense_element(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(7)->Arg(12)->Arg(60)->Arg(168);

void BM_DixonCongruenceQuotient(benchmark::State& state) {
  const auto g = modular::congruence_quotient(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(group::character_table_dixon(g));
  state.SetLabel("order " + std::to_string(g.order()));
}
BENCHMARK(BM_DixonCongruenceQuotient)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_DixonFermat(benchmark::State& state) {
  const auto g = fermat::fermat_group(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(group::character_table_dixon(g));
  state.SetLabel("order " + std::to_string(g.order()));
}
BENCHMARK(BM_DixonFermat)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Psl2ClosedForm(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psl2::multiplicities_closed_form(p));
}
BENCHMARK(BM_Psl2ClosedForm)->Arg(7)->Arg(101)->Arg(1009);

void BM_Psl2Direct(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psl2::multiplicities_direct(p));
}
BENCHMARK(BM_Psl2Direct)->Arg(7)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_FermatClosedForm(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fermat::multiplicities_closed_form(n));
}
BENCHMARK(BM_FermatClosedForm)->Arg(7)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_FermatDirect(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fermat::multiplicities_direct(n));
}
BENCHMARK(BM_FermatDirect)->Arg(7)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
