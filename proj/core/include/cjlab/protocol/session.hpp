#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "cjlab/protocol/frame.hpp"

namespace cjlab::protocol {

enum class Phase { AwaitingAuth, Authed, JobAssigned, Closed };

std::string_view phase_name(Phase phase);

/// Per-connection server-side state. A fresh connection (and hence a page
/// refresh, which tears the socket down) always starts at AwaitingAuth with
/// zero credited hashes. accepted_hashes only ever grows.
struct SessionState {
  Phase phase = Phase::AwaitingAuth;
  std::optional<JobFrame> current_job;
  std::uint64_t accepted_hashes = 0;
  std::optional<std::string> site_key;
};

struct Alert {
  enum class Kind { ProtocolError, AuthRejected, ShareRejected };
  Kind kind;
  std::string detail;
};

struct StepResult {
  std::vector<Frame> emit;     // frames to send to the client, in order
  std::vector<Alert> alerts;
  bool close_connection = false;
};

/// Job and token mint shared by all sessions of one server instance.
/// Job ids are the decimal form of a 48-bit counter seeded at start; blobs
/// are drawn from the seeded generator, so a given seed replays the exact
/// job sequence. The target is a server constant.
class ServerEnv {
 public:
  ServerEnv(std::vector<std::string> registered_keys, std::string target_hex,
            std::uint64_t seed);

  bool key_registered(const std::string& key) const;
  const std::string& target() const { return target_; }

  JobFrame mint_job();
  std::string mint_token();

 private:
  std::unordered_set<std::string> keys_;
  std::string target_;
  std::mt19937_64 rng_;
  std::uint64_t job_counter_;
};

/// One server-side transition. All client misbehavior surfaces as alerts;
/// only frames alter the state. Transitions:
///   AwaitingAuth + Auth(registered key)  -> JobAssigned, emit Authed + Job
///   AwaitingAuth + Auth(unknown key)     -> Closed, emit nothing
///   Authed/JobAssigned + Submit          -> verify; accept credits
///       difficulty(target) hashes, emits HashAccept(cumulative) + fresh Job
///   anything else                        -> protocol-error alert, no change
StepResult step(SessionState& state, const Frame& incoming, ServerEnv& env);

/// Connection-closed event.
StepResult on_close(SessionState& state);

}  // namespace cjlab::protocol
