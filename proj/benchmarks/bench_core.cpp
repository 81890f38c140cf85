#include <benchmark/benchmark.h>

#include "cevian/classic.hpp"
#include "cevian/del_pezzo.hpp"
#include "cevian/rank_search.hpp"
#include "cevian/simplex.hpp"

namespace {

using namespace cevian;

void BM_CheckCeva(benchmark::State& state) {
  const classic::Triangle2D t{{make_rational(0), make_rational(0)},
                              {make_rational(7, 3), make_rational(1, 5)},
                              {make_rational(-2), make_rational(9, 4)}};
  const auto mix = [&](int a, int b, int c) {
    const Rational s = a + b + c;
    return classic::Point2{(a * t.a.x + b * t.b.x + c * t.c.x) / s, (a * t.a.y + b * t.b.y + c * t.c.y) / s};
  };
  const auto d = mix(0, 3, 5), e = mix(2, 0, 5), f = mix(2, 3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(classic::check_ceva(t, d, e, f));
}
BENCHMARK(BM_CheckCeva);

void BM_LiftHToS(benchmark::State& state) {
  const del_pezzo::HPoint h{ProjectivePoint{make_rational(1), make_rational(2)},
                            ProjectivePoint{make_rational(3), make_rational(1)},
                            ProjectivePoint{make_rational(2), make_rational(3)}};
  for (auto _ : state) benchmark::DoNotOptimize(del_pezzo::lift_H_to_S(h));
}
BENCHMARK(BM_LiftHToS);

void BM_DecideConcurrent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto inst = simplex::random_instance(n, k, 1, simplex::InstanceKind::Positive);
  for (auto _ : state) benchmark::DoNotOptimize(simplex::decide_concurrent(inst));
  state.SetLabel(std::to_string(simplex::face_count(n, k)) + " faces");
}
BENCHMARK(BM_DecideConcurrent)->Args({2, 1})->Args({4, 1})->Args({4, 2})->Args({6, 1})->Args({6, 3})->Args({6, 5});

void BM_GeometricOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto inst = simplex::random_instance(n, k, 1, simplex::InstanceKind::Positive);
  for (auto _ : state) benchmark::DoNotOptimize(simplex::geometric_oracle(inst));
  state.SetLabel(std::to_string(simplex::face_count(n, k)) + " faces");
}
BENCHMARK(BM_GeometricOracle)->Args({2, 1})->Args({4, 1})->Args({4, 2})->Args({6, 1})->Args({6, 3})->Args({6, 5});

void BM_LowRankComplete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const int r = static_cast<int>(state.range(2));
  const auto m = rank_search::construct_rank_instance(n, k, r, 6000);
  rank_search::RankSearchConfig cfg;
  cfg.r = r;
  for (auto _ : state) benchmark::DoNotOptimize(rank_search::low_rank_complete(m, cfg));
}
BENCHMARK(BM_LowRankComplete)->Args({3, 1, 1})->Args({4, 2, 1})->Args({5, 2, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
