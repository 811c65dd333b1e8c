#include "cjlab/simnet/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "cjlab/simnet/relay.hpp"
#include "cjlab/simnet/server.hpp"
#include "cjlab/simnet/tcp.hpp"

namespace cjlab::simnet {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> effective_blacklist(const ScenarioParams& p) {
  return p.blacklist.empty() ? std::vector<std::string>{p.server_endpoint}
                             : p.blacklist;
}

ServerConfig server_config(const ScenarioParams& p) {
  ServerConfig cfg;
  cfg.registered_keys = {p.site_key};
  cfg.target = p.target;
  cfg.seed = p.seed;
  cfg.endpoint = p.server_endpoint;
  return cfg;
}

MinerConfig miner_config(const ScenarioParams& p, const std::string& dialed) {
  MinerConfig cfg;
  cfg.alpha = p.alpha;
  cfg.h_max = p.h_max;
  cfg.site_key = p.site_key;
  cfg.server_endpoint = dialed;
  cfg.duration_s = p.duration_s;
  cfg.seed = p.seed;
  return cfg;
}

void finish_report(ScenarioReport& report, const ScenarioParams& p,
                   ScenarioKind kind, const std::string& dialed_endpoint) {
  report.scenario = std::string(scenario_name(kind));
  report.seed = p.seed;
  report.alpha = p.alpha;
  report.duty_cycle = 1.0 - p.alpha;

  std::vector<ConnectionRecord> conns{{dialed_endpoint, 0, "s1"}};
  report.verdicts.push_back(
      blacklist_detector(conns, effective_blacklist(p)));
  report.verdicts.push_back(payload_detector(report.frame_log.records));
}

ScenarioReport run_mining_inproc(ScenarioKind kind, const ScenarioParams& p) {
  VirtualClock clock;
  ScenarioReport report;

  ServerConfig scfg = server_config(p);
  DropzoneServer server(scfg, clock, nullptr);

  const bool via_relay = kind == ScenarioKind::Relay;
  const std::string dialed =
      via_relay ? p.relay_endpoint : p.server_endpoint;

  auto [miner_end, far_end] = make_inproc_pair();
  std::unique_ptr<RelayLink> relay;
  if (via_relay) {
    auto [relay_up, server_end] = make_inproc_pair();
    relay = std::make_unique<RelayLink>(std::move(far_end),
                                        std::move(relay_up));
    server.attach(std::move(server_end));
  } else {
    server.attach(std::move(far_end));
  }

  MinerConfig mcfg = miner_config(p, dialed);
  if (kind == ScenarioKind::Keyless) {
    mcfg.site_key = "ffffffffffffffffffffffffffffffff";  // not registered
  }
  MinerClient miner(mcfg, std::move(miner_end), clock, &report.frame_log);

  const auto pump_world = [&] {
    bool progress = true;
    while (progress) {
      progress = false;
      if (relay) progress |= relay->pump();
      progress |= server.pump();
      progress |= miner.pump();
    }
  };

  report.miner = run_miner(miner, p.duration_s, clock, pump_world);
  report.total_accepted_hashes = server.total_accepted_hashes();
  report.attempted_hashes = report.miner.attempted_hashes;
  report.session_count = server.session_count();
  finish_report(report, p, kind, dialed);
  return report;
}

ScenarioReport run_benign_inproc(const ScenarioParams& p) {
  VirtualClock clock;
  ScenarioReport report;
  const std::string dialed = "chat.example:8080";

  auto [client_end, server_end] = make_inproc_pair();
  for (std::uint64_t t = 0; t < std::min<std::uint64_t>(p.duration_s, 8); ++t) {
    ordered_json msg{{"type", "chat"},
                     {"params", {{"text", "ping " + std::to_string(t)}}}};
    std::string bytes = msg.dump();
    report.frame_log.add(clock.now_ms(), "s1",
                         protocol::Direction::ClientToServer, bytes);
    client_end->send(bytes);
    while (auto received = server_end->poll()) {
      ordered_json echo{{"type", "chat"}, {"params", {{"echo", true}}}};
      server_end->send(echo.dump());
    }
    while (auto received = client_end->poll()) {
      report.frame_log.add(clock.now_ms(), "s1",
                           protocol::Direction::ServerToClient, *received);
    }
    clock.advance_ms(1000);
  }

  report.miner.duration_s = p.duration_s;
  report.session_count = 1;
  finish_report(report, p, ScenarioKind::BenignSocket, dialed);
  return report;
}

ScenarioReport run_mining_tcp(ScenarioKind kind, const ScenarioParams& p) {
  SystemClock clock;
  ScenarioReport report;

  TcpDropzone server(server_config(p), "127.0.0.1", 0);
  const std::string server_ep = server.endpoint();

  // Optional relay: separate listener, verbatim forwarding in a thread.
  std::unique_ptr<TcpListener> relay_listener;
  std::thread relay_thread;
  std::atomic<bool> relay_running{true};
  std::string dialed = server_ep;
  if (kind == ScenarioKind::Relay) {
    relay_listener = std::make_unique<TcpListener>("127.0.0.1", 0);
    dialed = relay_listener->endpoint();
    auto [host, port] = parse_endpoint(server_ep);
    relay_thread = std::thread([&, host, port] {
      auto client_side = relay_listener->accept(3000);
      if (!client_side) return;
      RelayLink link(std::move(client_side), tcp_connect(host, port, 3000));
      while (relay_running.load()) {
        if (!link.pump()) {
          std::this_thread::sleep_for(std::chrono::milliseconds(1));
        }
      }
    });
  }

  auto [host, port] = parse_endpoint(dialed);
  MinerConfig mcfg = miner_config(p, dialed);
  if (kind == ScenarioKind::Keyless) {
    mcfg.site_key = "ffffffffffffffffffffffffffffffff";
  }
  MinerClient miner(mcfg, tcp_connect(host, port, 3000), clock,
                    &report.frame_log);

  const auto pump_world = [&] {
    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(500);
    while (std::chrono::steady_clock::now() < deadline) {
      miner.pump();
      if (miner.has_job() || miner.connection_closed()) return;
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
  };

  for (std::uint64_t t = 0; t < p.duration_s; ++t) {
    const auto slice_end =
        std::chrono::steady_clock::now() + std::chrono::seconds(1);
    miner.run_slice(pump_world);
    std::this_thread::sleep_until(slice_end);
  }
  miner.pump();

  if (relay_thread.joinable()) {
    relay_running.store(false);
    relay_thread.join();
  }
  server.stop();

  report.miner = miner.summary();
  report.total_accepted_hashes = server.total_accepted_hashes();
  report.attempted_hashes = report.miner.attempted_hashes;
  report.session_count = 1;

  // Endpoint names are synthetic in TCP mode; blacklist the real server
  // address so the policy question stays the same.
  ScenarioParams adjusted = p;
  if (adjusted.blacklist.empty()) adjusted.blacklist = {server_ep};
  finish_report(report, adjusted, kind, dialed);
  return report;
}

}  // namespace

std::string_view scenario_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Direct: return "direct";
    case ScenarioKind::Relay: return "relay";
    case ScenarioKind::Keyless: return "keyless";
    case ScenarioKind::BenignSocket: return "benign-socket";
  }
  return "?";
}

std::optional<ScenarioKind> parse_scenario_name(std::string_view name) {
  if (name == "direct") return ScenarioKind::Direct;
  if (name == "relay") return ScenarioKind::Relay;
  if (name == "keyless") return ScenarioKind::Keyless;
  if (name == "benign-socket") return ScenarioKind::BenignSocket;
  return std::nullopt;
}

const DetectorVerdict& ScenarioReport::verdict(DetectorKind kind) const {
  for (const DetectorVerdict& v : verdicts) {
    if (v.detector == kind) return v;
  }
  throw std::logic_error("scenario report has no such verdict");
}

ScenarioReport run_scenario(ScenarioKind kind, const ScenarioParams& params) {
  if (params.alpha < 0.0 || params.alpha >= 1.0) {
    throw std::invalid_argument("scenario: alpha must be in [0, 1)");
  }
  if (params.transport == TransportKind::Tcp) {
    if (kind == ScenarioKind::BenignSocket) {
      throw std::invalid_argument(
          "scenario: benign-socket is in-process only");
    }
    return run_mining_tcp(kind, params);
  }
  if (kind == ScenarioKind::BenignSocket) return run_benign_inproc(params);
  return run_mining_inproc(kind, params);
}

std::string report_to_json(const ScenarioReport& report,
                           const std::string& frame_log_path) {
  ordered_json j;
  j["scenario"] = report.scenario;
  j["seed"] = report.seed;
  j["alpha"] = report.alpha;
  j["cpu_duty_cycle"] = report.duty_cycle;
  j["total_accepted_hashes"] = report.total_accepted_hashes;
  j["attempted_hashes"] = report.attempted_hashes;
  j["session_count"] = report.session_count;
  j["miner"] = {{"attempted_hashes", report.miner.attempted_hashes},
                {"accepted_hashes", report.miner.accepted_hashes},
                {"shares_accepted", report.miner.shares_accepted},
                {"achieved_rate", report.miner.achieved_rate},
                {"completed", report.miner.completed},
                {"note", report.miner.note}};
  j["frame_log"] = frame_log_path;
  ordered_json verdicts = ordered_json::array();
  for (const DetectorVerdict& v : report.verdicts) {
    ordered_json item;
    item["detector"] = std::string(detector_name(v.detector));
    item["flagged"] = v.flagged;
    item["trigger"] = std::string(trigger_name(v.trigger));
    if (v.time_of_flag_ms) {
      item["time_of_flag_ms"] = *v.time_of_flag_ms;
    } else {
      item["time_of_flag_ms"] = nullptr;
    }
    verdicts.push_back(std::move(item));
  }
  j["verdicts"] = std::move(verdicts);
  return j.dump(2);
}

}  // namespace cjlab::simnet
