// Microbenchmarks for the exact-arithmetic hot paths: tensor algebra,
// the full analysis pipeline on the four-dimensional family, and the
// Kahler-like nullspace elimination.

#include <array>

#include <benchmark/benchmark.h>

#include "hgman/example.hpp"
#include "hgman/kahler.hpp"
#include "hgman/lie.hpp"
#include "hgman/pipeline.hpp"
#include "hgman/tensor.hpp"

namespace {

using hgman::build_example_w4;
using hgman::curvature;
using hgman::HGManifold;
using hgman::kahlerlike_nullspace;
using hgman::kulkarni_nomizu;
using hgman::levi_civita;
using hgman::Rational;
using hgman::run_pipeline;
using hgman::Tensor;
using hgman::Variance;

const std::array<Rational, 4> kReference{Rational(1), Rational(2), Rational(3),
                                         Rational(4)};

Tensor dense_bilinear(int dim) {
  Tensor t(dim, {Variance::down, Variance::down});
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t(i, j) = Rational(i + 1, j + 2) + Rational(j - i);
  return t;
}

void BM_TensorContract(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Tensor a(dim, {Variance::down, Variance::up});
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Rational(i - j, 1 + i + j);
  const Tensor prod = outer(a, a);
  for (auto _ : state) {
    Tensor traced = contract(prod, {{1, 2}});
    benchmark::DoNotOptimize(traced);
  }
}
BENCHMARK(BM_TensorContract)->Arg(4)->Arg(8);

void BM_KulkarniNomizu(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const Tensor a = dense_bilinear(dim);
  for (auto _ : state) {
    Tensor prod = kulkarni_nomizu(a, a);
    benchmark::DoNotOptimize(prod);
  }
}
BENCHMARK(BM_KulkarniNomizu)->Arg(4)->Arg(8);

void BM_LeviCivitaCurvature(benchmark::State& state) {
  const HGManifold M = build_example_w4(kReference);
  for (auto _ : state) {
    auto nabla = levi_civita(M.lie, M.metric);
    Tensor riemann = curvature(M.lie, nabla, M.metric);
    benchmark::DoNotOptimize(riemann);
  }
}
BENCHMARK(BM_LeviCivitaCurvature);

void BM_FullPipeline(benchmark::State& state) {
  const HGManifold M = build_example_w4(kReference);
  for (auto _ : state) {
    auto result = run_pipeline(M);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_FullPipeline)->Unit(benchmark::kMillisecond);

void BM_NullspaceDim4Full(benchmark::State& state) {
  for (auto _ : state) {
    auto ns = kahlerlike_nullspace(1);
    benchmark::DoNotOptimize(ns);
  }
}
BENCHMARK(BM_NullspaceDim4Full);

void BM_NullspaceDim4CurvatureOnly(benchmark::State& state) {
  for (auto _ : state) {
    auto ns = kahlerlike_nullspace(1, {false, false, false});
    benchmark::DoNotOptimize(ns);
  }
}
BENCHMARK(BM_NullspaceDim4CurvatureOnly);

void BM_NullspaceDim8Full(benchmark::State& state) {
  for (auto _ : state) {
    auto ns = kahlerlike_nullspace(2, {true, true, true}, false);
    benchmark::DoNotOptimize(ns);
  }
}
BENCHMARK(BM_NullspaceDim8Full)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
