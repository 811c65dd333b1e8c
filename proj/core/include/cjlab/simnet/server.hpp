#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cjlab/protocol/log.hpp"
#include "cjlab/protocol/session.hpp"
#include "cjlab/simnet/clock.hpp"
#include "cjlab/simnet/transport.hpp"

namespace cjlab::simnet {

struct ServerConfig {
  std::vector<std::string> registered_keys;
  std::string target = "ffffff00";
  std::uint64_t seed = 0;
  std::string endpoint = "dropzone.example:9090";
};

/// In-process dropzone. Sessions are attached explicitly and driven by
/// pump(); each session owns its state and its ledger, concurrent miners
/// never share anything. Throws std::invalid_argument on an empty key
/// registry.
class DropzoneServer {
 public:
  DropzoneServer(ServerConfig config, const Clock& clock,
                 protocol::FrameLog* log);

  std::string attach(std::unique_ptr<MsgStream> peer);

  /// Processes every pending inbound message once; true if any progress.
  bool pump();

  std::uint64_t total_accepted_hashes() const;
  std::size_t session_count() const { return sessions_.size(); }
  std::uint64_t accepted_hashes(const std::string& session_id) const;
  const std::vector<protocol::Alert>& alerts() const { return alerts_; }
  const ServerConfig& config() const { return config_; }

 private:
  struct Session {
    std::string id;
    protocol::SessionState state;
    std::unique_ptr<MsgStream> peer;
  };

  ServerConfig config_;
  protocol::ServerEnv env_;
  const Clock& clock_;
  protocol::FrameLog* log_;
  std::vector<Session> sessions_;
  std::vector<protocol::Alert> alerts_;
  std::uint64_t next_session_ = 1;
};

/// TCP front end over the same session logic, for the real-time mode.
/// Runs an accept loop plus one thread per connection until stop().
class TcpDropzone {
 public:
  /// Binds host:port (0 = ephemeral) and starts serving.
  TcpDropzone(ServerConfig config, const std::string& host,
              std::uint16_t port);
  ~TcpDropzone();

  std::string endpoint() const;
  std::uint64_t total_accepted_hashes() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cjlab::simnet
