#include <benchmark/benchmark.h>

#include <random>

#include "xiform/blocks.hpp"
#include "xiform/decide.hpp"
#include "xiform/exactmat.hpp"
#include "xiform/oracle.hpp"
#include "xiform/regularize.hpp"

namespace {

using namespace xiform;

void BM_OracleSymplectic(benchmark::State& state) {
  const Matrix z = symplectic_unit(static_cast<std::size_t>(state.range(0)), Field::prime(3));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_isometries(z, default_enumeration_limit, threads));
}
BENCHMARK(BM_OracleSymplectic)->Args({1, 1})->Args({2, 1})->Args({2, 0})->Unit(benchmark::kMillisecond);

// Oracle over a slice of M_3(F3): the inner loop of the exhaustive acceptance run.
void BM_OracleM3F3(benchmark::State& state) {
  const Field f = Field::prime(3);
  std::uint64_t idx = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_verdict(matrix_from_index(f, 3, idx), default_enumeration_limit, 1));
    idx = (idx + 7919) % 19683;
  }
}
BENCHMARK(BM_OracleM3F3);

void BM_DecideRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(42);
  std::vector<Matrix> inputs;
  for (int i = 0; i < 32; ++i) {
    const Matrix a = random_matrix(Field::rationals(), n, n, rng, 5);
    inputs.push_back(a + a.transpose());  // symmetric: the fast path never fires
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decide(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_DecideRational)->DenseRange(2, 8, 2);

void BM_GammaShiftRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(43);
  const Matrix a = random_matrix(Field::rationals(), n, n, rng, 5);
  for (auto _ : state) benchmark::DoNotOptimize(decide_gamma_shift(a));
}
BENCHMARK(BM_GammaShiftRational)->DenseRange(2, 8, 2);

void BM_RegularizeHidden(benchmark::State& state) {
  const Field q = Field::rationals();
  const auto k = static_cast<std::size_t>(state.range(0));
  const Matrix m =
      random_congruence(direct_sum({jordan(k, Scalar::zero(q)), jordan(k + 1, Scalar::zero(q)), xiform::gamma(k, q)}), 5).image;
  for (auto _ : state) benchmark::DoNotOptimize(regularize(m));
}
BENCHMARK(BM_RegularizeHidden)->DenseRange(1, 4);

void BM_DetPoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(44);
  const Matrix a = random_matrix(Field::rationals(), n, n, rng, 5);
  const Matrix b = random_matrix(Field::rationals(), n, n, rng, 5);
  for (auto _ : state) benchmark::DoNotOptimize(det_poly(a, b));
}
BENCHMARK(BM_DetPoly)->DenseRange(2, 10, 4);

}  // namespace

BENCHMARK_MAIN();
