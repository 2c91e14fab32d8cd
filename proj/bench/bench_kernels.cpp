// Parallel kernels against their serial references. The serial matrix
// builder uses dense Kronecker products and is impractical beyond 8 modes.

#include <benchmark/benchmark.h>

#include "fc/batch.hpp"
#include "fc/dense.hpp"
#include "fc/h2.hpp"
#include "fc/verify.hpp"

using namespace fc;

namespace {

FermionicSum random_hamiltonian(std::size_t M, int terms, std::uint64_t seed) {
  Rng rng(seed);
  FermionicSum h(M);
  for (int k = 0; k < terms; ++k) h.add(random_fermion(rng, M), Coeff::real(uniform(rng, -1, 1)));
  return h;
}

void BM_ToMatrixParallel(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  FermionicSum h = random_hamiltonian(M, 64, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dense::to_matrix(h, M));
}

void BM_ToMatrixSerial(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  FermionicSum h = random_hamiltonian(M, 64, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dense::to_matrix_reference(h, M));
}

void BM_ConjugateTermsParallel(benchmark::State& state) {
  FermionicSum h = random_hamiltonian(6, static_cast<int>(state.range(0)), 2);
  Generator g = Generator::pair(1, 4, GenSign::Anti);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_terms(h, g, Angle::radians(0.3)));
}

void BM_ConjugateTermsSerial(benchmark::State& state) {
  FermionicSum h = random_hamiltonian(6, static_cast<int>(state.range(0)), 2);
  Generator g = Generator::pair(1, 4, GenSign::Anti);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_terms_serial(h, g, Angle::radians(0.3)));
}

void BM_TaperH2Parallel(benchmark::State& state) {
  h2::Report r = h2::demo();
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_terms(r.pauli, r.plan.cliffords[0]));
}

void BM_TaperH2Serial(benchmark::State& state) {
  h2::Report r = h2::demo();
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_terms_serial(r.pauli, r.plan.cliffords[0]));
}

}  // namespace

BENCHMARK(BM_ToMatrixParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ToMatrixSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ConjugateTermsParallel)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ConjugateTermsSerial)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TaperH2Parallel)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TaperH2Serial)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
