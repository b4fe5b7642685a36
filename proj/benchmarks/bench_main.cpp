#include <benchmark/benchmark.h>

#include "tfhankel/hankel.hpp"
#include "tfhankel/oracle.hpp"
#include "tfhankel/pade.hpp"
#include "tfhankel/roots.hpp"

namespace {

using namespace tfh;

void BM_Expand(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand(EquationKind::Atom, order));
}
BENCHMARK(BM_Expand)->Arg(20)->Arg(34)->Arg(44)->Unit(benchmark::kMillisecond);

void BM_HankelPoly(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const SeriesTable table = expand(EquationKind::Atom, 2 * (D - 1) + 5);
  for (auto _ : state) benchmark::DoNotOptimize(hankel_poly(table, {EquationKind::Atom, 4, D}));
}
BENCHMARK(BM_HankelPoly)->DenseRange(6, 15, 3)->Unit(benchmark::kMillisecond);

void BM_RealRoots(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const SeriesTable table = expand(EquationKind::MagneticField, 2 * (D - 1) + 5);
  const UniPoly h = hankel_poly(table, {EquationKind::MagneticField, 4, D});
  for (auto _ : state) benchmark::DoNotOptimize(real_roots(h, -2, 0, 50));
  state.counters["degree"] = h.degree();
}
BENCHMARK(BM_RealRoots)->DenseRange(6, 15, 3)->Unit(benchmark::kMillisecond);

void BM_TrackSequence(benchmark::State& state) {
  TrackOptions o;
  o.d = 4;
  o.D_max = static_cast<int>(state.range(0));
  const SeriesTable table = expand(EquationKind::MagneticField, 2 * (o.D_max - 1) + o.d + 1);
  for (auto _ : state) benchmark::DoNotOptimize(track_sequence(table, o));
}
BENCHMARK(BM_TrackSequence)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_BuildPade(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const BigFloat slope = BigFloat::parse("-1.588071022611375313", 50);
  const auto coeffs = evaluate_at(expand(EquationKind::Atom, 2 * N), slope / 2, 2 * N);
  for (auto _ : state) benchmark::DoNotOptimize(build_pade(coeffs, N - 3, N));
}
BENCHMARK(BM_BuildPade)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_ShootSlope(benchmark::State& state) {
  const BigFloat lo = BigFloat::parse("-2", 20);
  const BigFloat hi = BigFloat::parse("-1", 20);
  const BigFloat tol = BigFloat::parse("1e-10", 20);
  for (auto _ : state) benchmark::DoNotOptimize(shoot_slope(EquationKind::Atom, lo, hi, tol));
}
BENCHMARK(BM_ShootSlope)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
