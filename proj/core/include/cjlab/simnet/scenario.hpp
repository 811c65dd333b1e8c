#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cjlab/protocol/log.hpp"
#include "cjlab/simnet/detectors.hpp"
#include "cjlab/simnet/miner.hpp"

namespace cjlab::simnet {

enum class ScenarioKind { Direct, Relay, Keyless, BenignSocket };
enum class TransportKind { InProcess, Tcp };

std::string_view scenario_name(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario_name(std::string_view name);

struct ScenarioParams {
  double alpha = 0.1;
  std::uint64_t h_max = 1000;
  std::uint64_t duration_s = 30;
  std::uint64_t seed = 0;
  std::string target = "ffffff00";
  std::string server_endpoint = "dropzone.example:9090";
  std::string relay_endpoint = "relay.example:9191";
  std::string site_key = "0123456789abcdef0123456789abcdef";
  // Defaults to { server_endpoint } when empty: the dropzone is known to
  // the extension vendors, the relay is not.
  std::vector<std::string> blacklist;
  TransportKind transport = TransportKind::InProcess;
};

struct ScenarioReport {
  std::string scenario;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  double duty_cycle = 0.0;  // modeled CPU share = 1 - alpha
  std::uint64_t total_accepted_hashes = 0;
  std::uint64_t attempted_hashes = 0;
  std::size_t session_count = 0;
  MinerSummary miner;
  std::vector<DetectorVerdict> verdicts;  // blacklist first, then payload
  protocol::FrameLog frame_log;           // client-side traffic

  const DetectorVerdict& verdict(DetectorKind kind) const;
};

/// Orchestrates one named experiment end to end: dropzone server, optional
/// relay, miner (or chat client), and both detectors over the client-side
/// traffic. With the in-process transport the run is deterministic in
/// (scenario, params): the virtual clock advances one second per slice and
/// all PoW nonce order is seeded. The TCP transport runs the same topology
/// in real time on 127.0.0.1. Throws std::runtime_error when a component
/// cannot start.
ScenarioReport run_scenario(ScenarioKind kind, const ScenarioParams& params);

std::string report_to_json(const ScenarioReport& report,
                           const std::string& frame_log_path);

}  // namespace cjlab::simnet
