#include <benchmark/benchmark.h>

#include <random>

#include "partcong/hecke.hpp"
#include "partcong/modforms.hpp"
#include "partcong/partition.hpp"
#include "partcong/pipeline.hpp"
#include "partcong/qseries.hpp"

using namespace partcong;

namespace {

Series<ModRing> random_series(const ModRing& ring, std::size_t P, u64 seed) {
  std::mt19937_64 rng(seed);
  std::vector<u64> c(P);
  for (auto& x : c) x = rng() % ring.modulus().value();
  return Series<ModRing>(ring, c);
}

void BM_SeriesMul(benchmark::State& state) {
  const ModRing ring{Modulus(13)};
  const std::size_t P = static_cast<std::size_t>(state.range(0));
  const auto a = random_series(ring, P, 1), b = random_series(ring, P, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity();

void BM_EtaPower(benchmark::State& state) {
  const ModRing ring{Modulus(37)};
  const std::size_t P = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eta_power(ring, 11, P));
}
BENCHMARK(BM_EtaPower)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

void BM_PartitionTable(benchmark::State& state) {
  const Modulus M(13);
  const u64 N = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partition_mod(N, M));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PartitionTable)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

void BM_MatrixOfT(benchmark::State& state) {
  const u64 ell = static_cast<u64>(state.range(0));
  const SpaceParams params = certify_space(37, 1);
  const ModRing ring{Modulus(37)};
  const auto basis = srs_basis(ring, params, matrix_of_T_slots(params, 2, ell));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_of_T(basis, ell));
}
BENCHMARK(BM_MatrixOfT)->Arg(5)->Arg(23)->Arg(61)->Unit(benchmark::kMillisecond);

void BM_OrderInPGL(benchmark::State& state) {
  const ModRing ring{Modulus(37)};
  Matrix<ModRing> A(ring, 2, 2);
  A(0, 0) = 1;
  A(1, 1) = 32;
  const BlockMatrix bx = block_X(A, 5, 33);
  for (auto _ : state) benchmark::DoNotOptimize(order_in_PGL(bx.X));
}
BENCHMARK(BM_OrderInPGL);

void BM_Certify(benchmark::State& state) {
  CertifyOptions opt;
  opt.spot_checks = false;
  for (auto _ : state) benchmark::DoNotOptimize(certify(37, 1, 5, opt));
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
