#include <benchmark/benchmark.h>

#include "dalc/channel.hpp"
#include "dalc/codec.hpp"
#include "dalc/decoder.hpp"
#include "dalc/harness.hpp"

using namespace dalc;

namespace {

SweepConfig bench_config() {
    SweepConfig c;
    c.n = 300;
    c.alpha = 0.6;
    c.M = 256;
    c.epsilon_grid = {0.05, 0.1};
    c.trials = 16;
    return c;
}

void BM_SweepSerial(benchmark::State& state) {
    const SweepConfig c = bench_config();
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c));
}

void BM_SweepParallel(benchmark::State& state) {
    const SweepConfig c = bench_config();
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c));
}

void BM_Decode(benchmark::State& state, ArithMode mode) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CodecParams codec = CodecParams::make(n, 0.5, 0.6, 0, mode);
    const SourceModel model{0.5, 0.05, 3};
    const BitSeq x = gen_source(n, model);
    const BitSeq y = gen_side_info(x, model);
    const BitSeq cw = encode(x, codec).codeword;
    const DecoderParams p{codec, 256, Metric::MdacEq3, 0.05, CodeSpec::none()};
    for (auto _ : state) benchmark::DoNotOptimize(search_candidates(cw, y, p));
}

void BM_Encode(benchmark::State& state, ArithMode mode) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CodecParams codec = CodecParams::make(n, 0.3, 0.6, 0, mode);
    const BitSeq x = gen_source(n, {0.3, 0.0, 5});
    for (auto _ : state) benchmark::DoNotOptimize(encode(x, codec));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Decode, exact, ArithMode::Exact)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decode, fixed64, ArithMode::Fixed64)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Encode, exact, ArithMode::Exact)->Arg(600);
BENCHMARK_CAPTURE(BM_Encode, fixed64, ArithMode::Fixed64)->Arg(600);

BENCHMARK_MAIN();
