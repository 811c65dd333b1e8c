#include <benchmark/benchmark.h>

#include <random>

#include "cjlab/protocol/frame.hpp"
#include "cjlab/protocol/pow.hpp"

namespace {

std::string random_hex(std::mt19937_64& rng, std::size_t n) {
  static const char digits[] = "0123456789abcdef";
  std::string s(n, '0');
  for (auto& c : s) c = digits[rng() % 16];
  return s;
}

void HashRate(benchmark::State& state) {
  std::mt19937_64 rng(7);
  cjlab::protocol::JobFrame job{"1", random_hex(rng, 152), "00000000"};
  std::uint32_t nonce = 0;
  for (auto _ : state) {
    auto r = cjlab::protocol::solve(job, nonce, 256);
    nonce += 256;
    benchmark::DoNotOptimize(r.attempts);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * 256);
}
BENCHMARK(HashRate);

void SolveAtListingTarget(benchmark::State& state) {
  std::mt19937_64 rng(11);
  for (auto _ : state) {
    cjlab::protocol::JobFrame job{"1", random_hex(rng, 152), "ffffff00"};
    auto r = cjlab::protocol::solve(job, static_cast<std::uint32_t>(rng()),
                                    1u << 20);
    benchmark::DoNotOptimize(r.share.has_value());
  }
}
BENCHMARK(SolveAtListingTarget);

void CodecRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const cjlab::protocol::Frame frame = cjlab::protocol::JobFrame{
      "164698158344253", random_hex(rng, 152), "ffffff00"};
  for (auto _ : state) {
    auto back = cjlab::protocol::decode(cjlab::protocol::encode(frame));
    benchmark::DoNotOptimize(back.index());
  }
}
BENCHMARK(CodecRoundTrip);

}  // namespace

BENCHMARK_MAIN();
