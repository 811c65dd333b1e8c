#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "cjlab/jsmetrics/metrics.hpp"

namespace {

// Deterministic synthetic program of roughly `statements` lines.
std::string sample_source(int statements) {
  std::mt19937_64 rng(1234);
  std::string out;
  for (int i = 0; i < statements; ++i) {
    switch (rng() % 4) {
      case 0:
        out += "var v" + std::to_string(i) + " = " +
               std::to_string(rng() % 1000) + ";\n";
        break;
      case 1:
        out += "if (v" + std::to_string(rng() % (i + 1)) + " && " +
               std::to_string(rng() % 9) + ") { total += 1; }\n";
        break;
      case 2:
        out += "function f" + std::to_string(i) +
               "(a, b) { return a * b + " + std::to_string(rng() % 50) +
               "; }\n";
        break;
      default:
        out += "for (var i = 0; i < " + std::to_string(1 + rng() % 30) +
               "; i++) { total = total - i; }\n";
        break;
    }
  }
  return out;
}

void TokenizeThroughput(benchmark::State& state) {
  const std::string source = sample_source(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto stream = cjlab::jsmetrics::tokenize(source);
    benchmark::DoNotOptimize(stream.tokens.size());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(source.size()));
}
BENCHMARK(TokenizeThroughput)->Range(16, 4096);

void ExtractFeatures(benchmark::State& state) {
  const std::string source = sample_source(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto fv = cjlab::jsmetrics::extract_features(source);
    benchmark::DoNotOptimize(fv.effort);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(source.size()));
}
BENCHMARK(ExtractFeatures)->Range(16, 4096);

}  // namespace

BENCHMARK_MAIN();
