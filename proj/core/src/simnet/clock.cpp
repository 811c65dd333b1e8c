#include "cjlab/simnet/clock.hpp"

#include <chrono>

namespace cjlab::simnet {

std::uint64_t SystemClock::now_ms() const {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
}

}  // namespace cjlab::simnet
