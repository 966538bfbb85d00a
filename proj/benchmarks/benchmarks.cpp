#include <benchmark/benchmark.h>

#include <random>

#include "hsseq/spectral_sequence.hpp"
#include "support/builders.hpp"

using namespace hsseq;
using namespace hsseq::testing;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& f,
                     std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-4, 4);
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Scalar::of(entry(rng), f));
  return m;
}

void bm_row_echelon_rational(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(n, 2 * n, Field::rationals(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(row_echelon(m));
}
BENCHMARK(bm_row_echelon_rational)->Arg(16)->Arg(32)->Arg(48);

void bm_row_echelon_mod_p(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(n, 2 * n, Field::prime(5), rng);
  for (auto _ : state) benchmark::DoNotOptimize(row_echelon(m));
}
BENCHMARK(bm_row_echelon_mod_p)->Arg(16)->Arg(32)->Arg(64);

void bm_subspace_intersection(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Subspace a = Subspace::span_of_columns(random_matrix(n, n / 2, Field::rationals(), rng));
  Subspace b = Subspace::span_of_columns(random_matrix(n, n / 2, Field::rationals(), rng));
  for (auto _ : state) benchmark::DoNotOptimize(subspace_intersection(a, b));
}
BENCHMARK(bm_subspace_intersection)->Arg(16)->Arg(48);

void bm_ce_differential(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  LieModule m = LieModule::trivial(LieAlgebra::abelian(n, Field::rationals()), 2);
  for (auto _ : state)
    for (std::size_t q = 0; q < n; ++q)
      benchmark::DoNotOptimize(ce_cochain_differential(m, q));
}
BENCHMARK(bm_ce_differential)->Arg(5)->Arg(7);

void bm_total_betti_semidirect(benchmark::State& state) {
  SplitExtension ext = heisenberg_extension(Field::rationals());
  LieModule total = total_module(ext);
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(total));
}
BENCHMARK(bm_total_betti_semidirect);

void bm_page_two(benchmark::State& state) {
  SplitExtension ext = heisenberg_extension(Field::rationals());
  DoubleComplex dc = build_double_complex(ext);
  for (auto _ : state) benchmark::DoNotOptimize(page(dc, 2));
}
BENCHMARK(bm_page_two);

void bm_full_run_to_stabilization(benchmark::State& state) {
  SplitExtension ext = heisenberg_extension(Field::rationals());
  for (auto _ : state) {
    DoubleComplex dc = build_double_complex(ext);
    benchmark::DoNotOptimize(length_and_collapse(dc));
  }
}
BENCHMARK(bm_full_run_to_stabilization);

} // namespace

BENCHMARK_MAIN();
