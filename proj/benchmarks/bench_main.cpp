#include <benchmark/benchmark.h>

#include <random>

#include "ybx/extension.hpp"
#include "ybx/gallery.hpp"
#include "ybx/primitive.hpp"
#include "ybx/rack.hpp"

using namespace ybx;
namespace gal = ybx::gallery;

namespace {

LinMap random_rational_map(std::mt19937_64& rng, long dom, long cod) {
  Field q = Field::rationals();
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  LinMap m(q, dom, cod);
  for (long r = 0; r < cod; ++r)
    for (long c = 0; c < dom; ++c) {
      Scalar v = Scalar::rational(num(rng), den(rng));
      if (!v.is_zero()) m.set(r, c, v);
    }
  return m;
}

void BM_ComposeDenseRational(benchmark::State& state) {
  std::mt19937_64 rng(1);
  long n = state.range(0);
  LinMap a = random_rational_map(rng, n, n);
  LinMap b = random_rational_map(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_ComposeDenseRational)->Arg(8)->Arg(16)->Arg(32);

void BM_TensorDenseRational(benchmark::State& state) {
  std::mt19937_64 rng(2);
  long n = state.range(0);
  LinMap a = random_rational_map(rng, n, n);
  LinMap b = random_rational_map(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(tensor(a, b));
}
BENCHMARK(BM_TensorDenseRational)->Arg(4)->Arg(8);

void BM_InvertDenseRational(benchmark::State& state) {
  std::mt19937_64 rng(3);
  long n = state.range(0);
  LinMap a = random_rational_map(rng, n, n);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(invert(a));
    } catch (const SingularMap&) {
    }
  }
}
BENCHMARK(BM_InvertDenseRational)->Arg(16)->Arg(48);

void BM_BraidCheckConjugationS3(benchmark::State& state) {
  Field q = Field::rationals();
  BraidedPair p = gal::conjugation_solution(q, gal::s3_table());
  for (auto _ : state) benchmark::DoNotOptimize(check_braid(p).pass);
}
BENCHMARK(BM_BraidCheckConjugationS3);

void BM_ExtendConjugationS3(benchmark::State& state) {
  Field q = Field::rationals();
  BraidedPair p = gal::conjugation_solution(q, gal::s3_table());
  for (auto _ : state) benchmark::DoNotOptimize(extend(p));
}
BENCHMARK(BM_ExtendConjugationS3);

void BM_GuitarTowerTranslation(benchmark::State& state) {
  Field q = Field::rationals();
  BraidedPair p = gal::cyclic_translation_pair(q, 3);
  long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(guitar(p, n));
}
BENCHMARK(BM_GuitarTowerTranslation)->Arg(3)->Arg(4)->Arg(5);

void BM_SearchF3d1(benchmark::State& state) {
  SearchOptions so;
  so.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long hits = 0;
    search_primitive(Field::mod(3), 1, so, [&](const PrimParams&, std::uint64_t) {
      ++hits;
      return true;
    });
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_SearchF3d1)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
