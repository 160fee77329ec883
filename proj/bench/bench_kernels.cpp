#include <benchmark/benchmark.h>

#include "bruhatkit/bruhat.hpp"
#include "bruhatkit/lowrank.hpp"
#include "bruhatkit/realform.hpp"

using namespace bruhatkit;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_WeylEnumerate(benchmark::State& state) {
  const auto rs = build_root_system(CartanMatrix::from_label("F4"));
  for (auto _ : state) benchmark::DoNotOptimize(WeylGroup::enumerate(rs, kDefaultWeylCap, mode(state)).size());
  label(state);
}

void BM_StratifyAndIdentities(benchmark::State& state) {
  const auto rs = build_root_system(CartanMatrix::from_label("B4"));
  const auto group = WeylGroup::enumerate(rs);
  const auto grading = grade(rs, EllipticElement{{1, 0, 1, 0}});
  const auto cosets = coset_sets(group, grading.levi_roots);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stratify(group, cosets, grading, mode(state)).cells.size());
    benchmark::DoNotOptimize(all_identities(group, cosets, grading, mode(state)).checked);
  }
  label(state);
}

void BM_CriterionSearch(benchmark::State& state) {
  // no witness exists, so both kernels scan the whole orbit
  const auto rs = build_root_system(CartanMatrix::from_label("F4"));
  const auto group = WeylGroup::enumerate(rs);
  const EllipticElement t{{1, 1, 1, 1}};
  const InnerInvolution z{{0, 0, 0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(criterion_s(group, t, z, mode(state)).holds);
  label(state);
}

void BM_Sl2Samples(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lowrank::sl2_sample_suite(lowrank::Sl2Class::A, 1000, 0, 1e-9, mode(state)).samples);
  label(state);
}

}  // namespace

BENCHMARK(BM_WeylEnumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StratifyAndIdentities)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CriterionSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sl2Samples)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
