#include <benchmark/benchmark.h>

#include "cppforge/field.hpp"

namespace {

using cppforge::Elem;
using cppforge::make_field;

void BM_Mul(benchmark::State& state) {
  const auto& ctx = make_field(static_cast<cppforge::u64>(state.range(0)), static_cast<unsigned>(state.range(1)));
  Elem x = ctx.generator();
  const Elem y = ctx.t() + ctx.one();
  for (auto _ : state) {
    x = x * y;
    benchmark::DoNotOptimize(x);
  }
}
// Table-backed fields, then one past the table limit.
BENCHMARK(BM_Mul)->Args({7, 3})->Args({3, 8})->Args({7, 6})->Args({3, 14});

void BM_PowBig(benchmark::State& state) {
  const auto& ctx = make_field(3, static_cast<unsigned>(state.range(0)));
  const Elem x = ctx.t() + ctx.one();
  const cppforge::BigInt e = cppforge::big_pow(3, 200) + 17;
  for (auto _ : state) benchmark::DoNotOptimize(x.pow(e));
}
BENCHMARK(BM_PowBig)->Arg(4)->Arg(8)->Arg(14);

void BM_Frobenius(benchmark::State& state) {
  const auto& ctx = make_field(5, 6);
  const Elem x = ctx.generator();
  for (auto _ : state) benchmark::DoNotOptimize(cppforge::frobenius(x, 3));
}
BENCHMARK(BM_Frobenius);

}  // namespace
