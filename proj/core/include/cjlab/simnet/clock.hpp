#pragma once

#include <cstdint>

namespace cjlab::simnet {

class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::uint64_t now_ms() const = 0;
};

/// Simulated time: advanced explicitly by the scenario loop, one slice at a
/// time, so every timestamp-dependent result replays exactly.
class VirtualClock final : public Clock {
 public:
  std::uint64_t now_ms() const override { return now_ms_; }
  void advance_ms(std::uint64_t delta) { now_ms_ += delta; }

 private:
  std::uint64_t now_ms_ = 0;
};

/// Wall clock, for the real-time (TCP) mode.
class SystemClock final : public Clock {
 public:
  std::uint64_t now_ms() const override;
};

}  // namespace cjlab::simnet
