#include <benchmark/benchmark.h>

#include "til/complex.hpp"
#include "til/groebner.hpp"
#include "til/io.hpp"
#include "til/resolution.hpp"
#include "til/transfer.hpp"

using namespace til;

namespace {

void BM_PolynomialProduct(benchmark::State& state) {
  Ring R(indexed_names("x", 6), Field::rationals());
  auto f = parse_polynomial<Rational>(R, "x1 + 2*x2 - x3 + x4*x5 + 3*x6^2 + 1");
  auto g = f.pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g * f);
}
BENCHMARK(BM_PolynomialProduct)->Arg(2)->Arg(4)->Arg(6);

void BM_MaximalMinors(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const Field F = Field::rationals();
  Ring S = matrix_ring(p, 2, F);
  auto A = build_A<Rational>(p, 2, S);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_minors(A));
}
BENCHMARK(BM_MaximalMinors)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

template <class K>
void buchberger_minors(benchmark::State& state, const Field& F) {
  const int p = static_cast<int>(state.range(0));
  Ring S = matrix_ring(p, 2, F);
  auto J = maximal_minors(build_A<K>(p, 2, S));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(J, S.order()));
}
void BM_BuchbergerMinorsQ(benchmark::State& state) { buchberger_minors<Rational>(state, Field::rationals()); }
void BM_BuchbergerMinorsFp(benchmark::State& state) { buchberger_minors<Fp>(state, Field::prime(32003)); }
BENCHMARK(BM_BuchbergerMinorsQ)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuchbergerMinorsFp)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_TransferElimination(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const Field F = Field::prime(static_cast<std::uint64_t>(p));
  for (auto _ : state) benchmark::DoNotOptimize(transfer_ideal(build_transfer_family<Fp>(p, 2, 0, F)));
}
BENCHMARK(BM_TransferElimination)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Resolution(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_resolution<Rational>(p, Field::rationals()));
}
BENCHMARK(BM_Resolution)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ConeHomology(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  auto R = build_resolution<Rational>(p, Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(homology_by_weight(R.cone, state.range(1)));
}
BENCHMARK(BM_ConeHomology)->Args({3, 8})->Args({4, 6})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
