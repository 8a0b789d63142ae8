#include <benchmark/benchmark.h>

#include "kannan/contraction.hpp"
#include "kannan/iteration.hpp"
#include "kannan/maps.hpp"
#include "kannan/space.hpp"

#include <random>
#include <string>
#include <vector>

namespace {

using namespace kannan;

// Valid generalized-metric tables: rationals in [1, 3] keep every three-hop
// path at least as long as any single edge.
FiniteSpace random_generalized_space(std::uint32_t points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> den(1, 10);
  std::vector<std::string> labels;
  std::vector<FiniteSpace::DistanceEntry> entries;
  for (std::uint32_t i = 0; i < points; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (std::uint32_t j = i + 1; j < points; ++j) {
      const std::uint32_t q = den(rng);
      std::uniform_int_distribution<std::uint32_t> num(q, 3 * q);
      entries.push_back({i, j, Rational(num(rng), q)});
    }
  }
  return FiniteSpace::from_pairs(FiniteSpace::Kind::Generalized,
                                 std::move(labels), entries);
}

RealizedFamily family(std::uint32_t n) {
  return realize_family(AnalyticFamily{AnalyticFamily::Id::Kannan23, n});
}

void BM_ValidateGeneralized(benchmark::State& state) {
  const FiniteSpace space = random_generalized_space(
      static_cast<std::uint32_t>(state.range(0)), 17);
  for (auto _ : state) {
    auto violations = validate_generalized_metric(space);
    benchmark::DoNotOptimize(violations);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ValidateGeneralized)->RangeMultiplier(2)->Range(4, 32)
    ->Complexity();

void BM_ValidateMetric(benchmark::State& state) {
  const RealizedFamily r =
      family(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto violations = validate_metric(r.space);
    benchmark::DoNotOptimize(violations);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ValidateMetric)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_KannanLambdaFamily(benchmark::State& state) {
  const RealizedFamily r =
      family(static_cast<std::uint32_t>(state.range(0)));
  const auto excluded = r.clamp_pairs();
  for (auto _ : state) {
    auto verdict = kannan_lambda(r.space, r.self_map, excluded);
    benchmark::DoNotOptimize(verdict);
  }
}
BENCHMARK(BM_KannanLambdaFamily)->Arg(10)->Arg(50)->Arg(100)->Arg(200);

void BM_TKannanLambdaFamily(benchmark::State& state) {
  // Denominators grow as n^n; N = 200 pushes ~460-digit integers through
  // the pair scan.
  const RealizedFamily r =
      family(static_cast<std::uint32_t>(state.range(0)));
  const auto excluded = r.clamp_pairs();
  for (auto _ : state) {
    auto verdict = t_kannan_lambda(r.space, r.self_map, r.aux_map, excluded);
    benchmark::DoNotOptimize(verdict);
  }
}
BENCHMARK(BM_TKannanLambdaFamily)->Arg(10)->Arg(50)->Arg(100)->Arg(200);

void BM_SearchCertificate(benchmark::State& state) {
  // A fixed-point-free rotation admits no certificate on an equilateral
  // space, so every one of the |X|! candidates is examined.
  const std::uint32_t points = static_cast<std::uint32_t>(state.range(0));
  std::vector<std::string> labels;
  std::vector<FiniteSpace::DistanceEntry> entries;
  std::vector<PointId> rotation(points);
  for (std::uint32_t i = 0; i < points; ++i) {
    labels.push_back("p" + std::to_string(i));
    rotation[i] = PointId{(i + 1) % points};
    for (std::uint32_t j = i + 1; j < points; ++j) {
      entries.push_back({i, j, Rational(1)});
    }
  }
  const FiniteSpace space =
      FiniteSpace::from_pairs(FiniteSpace::Kind::Metric, labels, entries);
  const FiniteSelfMap rotate(points, std::move(rotation));
  SearchOptions options;
  options.lambda_cap = Rational(1, 3);
  for (auto _ : state) {
    auto outcome = search_certificate(space, rotate, options);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_SearchCertificate)->DenseRange(4, 7);

void BM_PicardWithBounds(benchmark::State& state) {
  const RealizedFamily r =
      family(static_cast<std::uint32_t>(state.range(0)));
  const auto start = r.space.find("1/4");
  for (auto _ : state) {
    const Trajectory traj =
        picard(r.space, r.self_map, *start, 1000, &r.aux_map);
    auto report = verify_bounds(r.space, traj, r.aux_map, Rational(1, 3));
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_PicardWithBounds)->Arg(20)->Arg(40)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
