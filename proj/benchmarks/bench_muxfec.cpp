#include <benchmark/benchmark.h>

#include <random>

#include "muxfec/muxfec.hpp"

using namespace muxfec;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = FieldElement::from_code(f, rng() % f.extension_order());
  }
  return m;
}

const MuxCode& example() {
  static const MuxCode code = build_mux_code(select_parameters(12, 6, 4, 2), 1);
  return code;
}

void BM_FieldMultiply(benchmark::State& state) {
  const auto f = FieldSpec::with_default_extension(static_cast<std::uint32_t>(state.range(0)));
  auto a = FieldElement::from_code(f, f.q + 3);
  const auto b = FieldElement::from_code(f, 2 * f.q + 1);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMultiply)->Arg(11)->Arg(17)->Arg(101);

void BM_FieldInverse(benchmark::State& state) {
  const auto f = FieldSpec::with_default_extension(17);
  const auto a = FieldElement::from_code(f, 40);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_FieldInverse);

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n + 4, FieldSpec::with_default_extension(17), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(5)->Arg(10)->Arg(20);

void BM_DecodeTimes(benchmark::State& state) {
  const auto& code = example();
  const auto p = ErasurePattern::burst(code.params.n, 0, code.params.B);
  for (auto _ : state) benchmark::DoNotOptimize(decode_times(code.G, p));
}
BENCHMARK(BM_DecodeTimes);

void BM_VerifyExample(benchmark::State& state) {
  const auto& code = example();
  const VerifyOptions options{static_cast<unsigned>(state.range(0)), true};
  for (auto _ : state) benchmark::DoNotOptimize(verify_achievable(code, std::nullopt, options));
}
BENCHMARK(BM_VerifyExample)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildMuxCode(benchmark::State& state) {
  const auto params = select_parameters(12, 6, 4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_mux_code(params, 1));
}
BENCHMARK(BM_BuildMuxCode)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SimulateStream(benchmark::State& state) {
  const auto& code = example();
  const auto erasures = random_erasure_sequence(static_cast<std::size_t>(state.range(0)), code.params.channel(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_stream(code, erasures, 3));
}
BENCHMARK(BM_SimulateStream)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_GainTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gain_table(9, 3, 20, 60, 10, 40));
}
BENCHMARK(BM_GainTable);

}  // namespace

BENCHMARK_MAIN();
