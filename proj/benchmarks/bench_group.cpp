#include <benchmark/benchmark.h>

#include <random>

#include "mclain/mclain.hpp"

namespace {

using namespace mclain;

GroupElement dense_element(const Group& group, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(1, 4);
  Coefficients c;
  for (const Pair& p : group.relation().pairs()) c.emplace(p, RingValue::from_integer(group.ring(), coeff(rng)));
  return GroupElement(group, std::move(c));
}

void BM_Multiply(benchmark::State& state) {
  const Group group(RingSpec::integers_mod(7), chain(static_cast<int>(state.range(0))));
  const GroupElement g = dense_element(group, 1), h = dense_element(group, 2);
  for (auto _ : state) benchmark::DoNotOptimize(g * h);
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(8)->Arg(16);

void BM_Inverse(benchmark::State& state) {
  const Group group(RingSpec::integers_mod(7), chain(static_cast<int>(state.range(0))));
  const GroupElement g = dense_element(group, 3);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(g));
}
BENCHMARK(BM_Inverse)->Arg(4)->Arg(8)->Arg(16);

void BM_MultiplyIntegers(benchmark::State& state) {
  const Group group(RingSpec::integers(), chain(static_cast<int>(state.range(0))));
  const GroupElement g = dense_element(group, 4), h = dense_element(group, 5);
  for (auto _ : state) benchmark::DoNotOptimize(g * h);
}
BENCHMARK(BM_MultiplyIntegers)->Arg(8);

void BM_OrderedFactorization(benchmark::State& state) {
  const Relation delta = chain(static_cast<int>(state.range(0)));
  const Group group(RingSpec::integers_mod(5), delta);
  const GroupElement g = dense_element(group, 6);
  const std::vector<Pair> order = delta.pairs();
  for (auto _ : state) benchmark::DoNotOptimize(ordered_factorization(g, order));
}
BENCHMARK(BM_OrderedFactorization)->Arg(4)->Arg(6)->Arg(8);

void BM_CheckAxioms(benchmark::State& state) {
  const Relation delta = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(delta));
}
BENCHMARK(BM_CheckAxioms)->Arg(8)->Arg(16)->Arg(32);

void BM_NgonDemo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(demonstrate_ngon_obstruction(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NgonDemo)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
