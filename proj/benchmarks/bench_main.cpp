#include <benchmark/benchmark.h>

#include "polyknot/polyknot.hpp"

using namespace polyknot;

namespace {

PolynomialKnot trefoil() {
  return make_knot(3, {{Index(1, 3), Scalar(1)},
                       {Index(1, 1), Scalar(-3)},
                       {Index(2, 4), Scalar(1)},
                       {Index(2, 2), Scalar(-4)},
                       {Index(3, 5), Scalar(1)},
                       {Index(3, 3), Scalar(-10)},
                       {Index(3, 1), Scalar(9)}});
}

PolynomialKnot random_knot(Rng& rng, int n, int degree) {
  std::vector<std::pair<Index, Scalar>> entries;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= degree; ++j) entries.push_back({Index(i, j), Scalar(rng.uniform_rational(-3, 3, 12))});
  }
  entries.push_back({Index(1, degree), Scalar(1)});
  return make_knot(n, entries);
}

void BM_CertifyTrefoil(benchmark::State& state) {
  PolynomialKnot k = trefoil();
  for (auto _ : state) benchmark::DoNotOptimize(certify_embedding(k));
}
BENCHMARK(BM_CertifyTrefoil)->Unit(benchmark::kMillisecond);

void BM_CertifyRandom(benchmark::State& state) {
  Rng rng(42);
  std::vector<PolynomialKnot> knots;
  for (int i = 0; i < 16; ++i) knots.push_back(random_knot(rng, 3, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(certify_embedding(knots[i++ % knots.size()]));
}
BENCHMARK(BM_CertifyRandom)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  PolynomialKnot k = trefoil();
  OracleGrid grid{default_oracle_bound(k), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(sampling_oracle(k, grid));
}
BENCHMARK(BM_Oracle)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);

void BM_Distance(benchmark::State& state, const char* metric) {
  Rng rng(7);
  PolynomialKnot a = random_knot(rng, 3, 8), b = random_knot(rng, 3, 8);
  MetricTag m = parse_metric(metric);
  for (auto _ : state) benchmark::DoNotOptimize(distance(a, b, m));
}
BENCHMARK_CAPTURE(BM_Distance, inf, "inf");
BENCHMARK_CAPTURE(BM_Distance, two, "2");
BENCHMARK_CAPTURE(BM_Distance, three_halves, "3/2");

void BM_SturmRoots(benchmark::State& state) {
  // (x - 1)(x - 2)...(x - n)
  UPoly p{Rational(1)};
  for (int r = 1; r <= state.range(0); ++r) p = p * UPoly{Rational(-r), Rational(1)};
  for (auto _ : state) benchmark::DoNotOptimize(sturm_real_roots(p));
}
BENCHMARK(BM_SturmRoots)->Arg(5)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
