#include <benchmark/benchmark.h>

#include "sp4cert/certificate.hpp"
#include "sp4cert/decompose.hpp"
#include "sp4cert/generators.hpp"
#include "sp4cert/sampling.hpp"

using namespace sp4cert;

namespace {

Matrix4 element(long p, std::int64_t length, std::uint64_t seed = 1) {
  return sample4({GroupLabel::Gamma_1p, OddPrime(p), seed, static_cast<std::size_t>(length)});
}

void BM_MatMul(benchmark::State& state) {
  const Matrix4 a = element(5, state.range(0), 1);
  const Matrix4 b = element(5, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul(a, b));
}
BENCHMARK(BM_MatMul)->Arg(1)->Arg(10)->Arg(20);

void BM_MatInv(benchmark::State& state) {
  const Matrix4 a = element(5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mat_inv(a));
}
BENCHMARK(BM_MatInv)->Arg(1)->Arg(20);

void BM_Decompose(benchmark::State& state) {
  const Matrix4 k = element(state.range(0), state.range(1));
  const OddPrime p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(k, p, Coords::Untilded));
}
BENCHMARK(BM_Decompose)->Args({3, 5})->Args({3, 20})->Args({7, 20});

void BM_Witness(benchmark::State& state) {
  const Matrix4 k = element(state.range(0), state.range(1));
  const OddPrime p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normal_closure_witness(k, p));
}
BENCHMARK(BM_Witness)->Args({3, 5})->Args({3, 20})->Args({7, 20})->Unit(benchmark::kMillisecond);

void BM_CertVerify(benchmark::State& state) {
  const OddPrime p(state.range(0));
  const Certificate c = normal_closure_witness(element(state.range(0), state.range(1)), p);
  state.counters["nodes"] = static_cast<double>(c.nodes.size());
  for (auto _ : state) benchmark::DoNotOptimize(cert_verify(c));
}
BENCHMARK(BM_CertVerify)->Args({3, 20})->Args({7, 20})->Unit(benchmark::kMillisecond);

void BM_GeneratorCerts(benchmark::State& state) {
  const OddPrime p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_generator_certs(p));
}
BENCHMARK(BM_GeneratorCerts)->Arg(3)->Arg(19);

void BM_Identities(benchmark::State& state) {
  const OddPrime p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(p));
}
BENCHMARK(BM_Identities)->Arg(3)->Arg(19);

}  // namespace

BENCHMARK_MAIN();
