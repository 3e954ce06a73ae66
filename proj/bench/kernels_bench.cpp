// Serial reference kernels against their parallel counterparts.
//
//   affine_lab_bench --benchmark_filter=Energy
//
// Set OMP_NUM_THREADS to vary the parallel side.

#include <benchmark/benchmark.h>

#include "affine_lab/energy.hpp"
#include "affine_lab/expanders.hpp"
#include "affine_lab/families.hpp"
#include "affine_lab/generators.hpp"
#include "affine_lab/incidence.hpp"
#include "affine_lab/reference.hpp"

namespace al = affine_lab;

namespace {

al::ScalarSet progression(std::size_t n) {
  al::GenSpec spec;
  spec.n = n;
  return al::generate(spec);
}

al::ScalarSet random_set(std::size_t n) {
  al::GenSpec spec;
  spec.kind = al::GenKind::RandomInt;
  spec.n = n;
  spec.seed = 42;
  spec.range = 4 * n * n;
  return al::generate(spec);
}

al::LineSet reciprocal_family(std::size_t n) {
  const al::ScalarSet a = progression(n);
  return al::build_family({al::FamilyKind::ReciprocalDifference, a, a, al::Rational(1), al::Rational(1), std::nullopt})
      .lines;
}

void BM_EnergySerial(benchmark::State& state) {
  const al::LineSet lines = reciprocal_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(al::serial::energy(lines));
  state.counters["lines"] = static_cast<double>(lines.size());
}

void BM_EnergyParallel(benchmark::State& state) {
  const al::LineSet lines = reciprocal_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(al::energy(lines));
  state.counters["lines"] = static_cast<double>(lines.size());
}

void BM_ProfileSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const al::PointSet grid = al::PointSet::grid(progression(n), progression(n));
  for (auto _ : state) benchmark::DoNotOptimize(al::serial::line_profile(grid).size());
}

void BM_ProfileParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const al::PointSet grid = al::PointSet::grid(progression(n), progression(n));
  for (auto _ : state) benchmark::DoNotOptimize(al::line_profile(grid).size());
}

void BM_DirectionsSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const al::PointSet grid = al::PointSet::grid(random_set(n), random_set(n));
  for (auto _ : state) benchmark::DoNotOptimize(al::serial::directions(grid).size());
}

void BM_DirectionsParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const al::PointSet grid = al::PointSet::grid(random_set(n), random_set(n));
  for (auto _ : state) benchmark::DoNotOptimize(al::directions(grid).size());
}

void BM_InterceptsSerial(benchmark::State& state) {
  const al::ScalarSet a = random_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(al::serial::intercept_set(a).size());
}

void BM_InterceptsParallel(benchmark::State& state) {
  const al::ScalarSet a = random_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(al::intercept_set(a).size());
}

void BM_IncidencesSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const al::PointSet grid = al::PointSet::grid(progression(n), progression(n));
  const al::LineSet lines = reciprocal_family(n);
  for (auto _ : state) benchmark::DoNotOptimize(al::serial::count_incidences(grid, std::span<const al::AffLine>(lines)));
}

void BM_IncidencesParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const al::PointSet grid = al::PointSet::grid(progression(n), progression(n));
  const al::LineSet lines = reciprocal_family(n);
  for (auto _ : state) benchmark::DoNotOptimize(al::count_incidences(grid, std::span<const al::AffLine>(lines)));
}

}  // namespace

BENCHMARK(BM_EnergySerial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyParallel)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileParallel)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectionsSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectionsParallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InterceptsSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InterceptsParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IncidencesSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IncidencesParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
