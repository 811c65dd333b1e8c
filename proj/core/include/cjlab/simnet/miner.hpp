#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "cjlab/protocol/frame.hpp"
#include "cjlab/protocol/log.hpp"
#include "cjlab/simnet/clock.hpp"
#include "cjlab/simnet/transport.hpp"

namespace cjlab::simnet {

struct MinerConfig {
  double alpha = 0.1;  // throttle in [0, 1); effective rate = h_max * (1 - alpha)
  std::uint64_t h_max = 1000;  // device peak hash rate, hashes/second
  std::string site_key;
  std::string server_endpoint = "dropzone.example:9090";
  std::uint64_t duration_s = 30;
  std::uint64_t seed = 0;
  std::string session_label = "s1";  // identity used in the client-side log
};

struct MinerSummary {
  std::uint64_t attempted_hashes = 0;
  std::uint64_t accepted_hashes = 0;  // cumulative credit per hash_accept
  std::uint64_t shares_accepted = 0;
  std::uint64_t duration_s = 0;
  double achieved_rate = 0.0;  // accepted hashes per second
  bool completed = true;       // false when the server closed on us
  std::string note;
};

/// Duty-cycled mining client. Each 1-second slice attempts
/// floor(h_max * (1 - alpha)) hashes against the current job, submitting
/// whenever a share clears the target. Nonce start positions come from the
/// seeded generator, so a run is a pure function of (config, server seed).
/// The client logs its own traffic: the log is what a browser-side observer
/// of this socket would see.
class MinerClient {
 public:
  MinerClient(MinerConfig config, std::unique_ptr<MsgStream> conn,
              const Clock& clock, protocol::FrameLog* log);

  /// Sends the auth frame. Call once before the first slice.
  void start();

  /// Drains inbound frames (authed/job/hash_accept); true on progress.
  bool pump();

  /// One time slice. `pump_world` must move pending messages across the
  /// simulated network (relay, server and this client) until quiescent.
  void run_slice(const std::function<void()>& pump_world);

  bool connection_closed() const { return conn_->closed(); }
  bool has_job() const { return job_.has_value(); }
  MinerSummary summary() const;

 private:
  void send_frame(const protocol::Frame& frame);

  MinerConfig config_;
  std::unique_ptr<MsgStream> conn_;
  const Clock& clock_;
  protocol::FrameLog* log_;
  std::mt19937_64 rng_;
  std::optional<protocol::JobFrame> job_;
  std::uint32_t next_nonce_ = 0;
  MinerSummary totals_;
  bool started_ = false;
};

/// Convenience wrapper matching the one-call surface: drives a fresh miner
/// against an already-wired connection for config.duration_s virtual
/// seconds. Used by the scenario runner and the TCP mode.
MinerSummary run_miner(MinerClient& miner, std::uint64_t duration_s,
                       VirtualClock& clock,
                       const std::function<void()>& pump_world);

}  // namespace cjlab::simnet
