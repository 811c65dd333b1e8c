#include "cjlab/protocol/session.hpp"

#include "cjlab/protocol/pow.hpp"

namespace cjlab::protocol {

namespace {

Alert protocol_error(std::string detail) {
  return Alert{Alert::Kind::ProtocolError, std::move(detail)};
}

}  // namespace

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::AwaitingAuth: return "awaiting-auth";
    case Phase::Authed: return "authed";
    case Phase::JobAssigned: return "job-assigned";
    case Phase::Closed: return "closed";
  }
  return "?";
}

ServerEnv::ServerEnv(std::vector<std::string> registered_keys,
                     std::string target_hex, std::uint64_t seed)
    : keys_(registered_keys.begin(), registered_keys.end()),
      target_(std::move(target_hex)),
      rng_(seed ^ 0xD0Ef00D5EEDULL) {
  parse_target(target_);  // fail fast on a bad configuration
  job_counter_ = rng_() & 0xFFFFFFFFFFFFULL;
}

bool ServerEnv::key_registered(const std::string& key) const {
  return keys_.count(key) > 0;
}

JobFrame ServerEnv::mint_job() {
  JobFrame job;
  job.job_id = std::to_string(job_counter_++);
  std::uint8_t raw[76];
  for (std::size_t i = 0; i < sizeof raw; i += 8) {
    const std::uint64_t word = rng_();
    for (std::size_t b = 0; b < 8 && i + b < sizeof raw; ++b) {
      raw[i + b] = static_cast<std::uint8_t>(word >> (8 * b));
    }
  }
  job.blob = hex_encode(raw, sizeof raw);
  job.target = target_;
  return job;
}

std::string ServerEnv::mint_token() {
  std::uint8_t raw[16];
  for (std::size_t i = 0; i < sizeof raw; i += 8) {
    const std::uint64_t word = rng_();
    for (std::size_t b = 0; b < 8; ++b) {
      raw[i + b] = static_cast<std::uint8_t>(word >> (8 * b));
    }
  }
  return hex_encode(raw, sizeof raw);
}

StepResult step(SessionState& state, const Frame& incoming, ServerEnv& env) {
  StepResult result;

  if (state.phase == Phase::Closed) {
    result.alerts.push_back(protocol_error("frame after close"));
    return result;
  }

  if (const auto* auth = std::get_if<AuthFrame>(&incoming)) {
    if (state.phase != Phase::AwaitingAuth) {
      result.alerts.push_back(protocol_error("auth while already authed"));
      return result;
    }
    if (!env.key_registered(auth->site_key)) {
      state.phase = Phase::Closed;
      result.close_connection = true;
      result.alerts.push_back(
          Alert{Alert::Kind::AuthRejected, "unregistered site key"});
      return result;
    }
    state.site_key = auth->site_key;
    result.emit.push_back(AuthedFrame{env.mint_token(), 0});
    JobFrame job = env.mint_job();
    state.current_job = job;
    state.phase = Phase::JobAssigned;
    result.emit.push_back(std::move(job));
    return result;
  }

  if (const auto* submit = std::get_if<SubmitFrame>(&incoming)) {
    if (state.phase != Phase::JobAssigned && state.phase != Phase::Authed) {
      result.alerts.push_back(protocol_error("submit before auth"));
      return result;
    }
    if (!state.current_job) {
      result.alerts.push_back(Alert{Alert::Kind::ShareRejected, "wrong-job"});
      return result;
    }
    const VerifyResult v = verify_submit(*state.current_job, *submit);
    if (!v.accepted()) {
      result.alerts.push_back(Alert{Alert::Kind::ShareRejected,
                                    std::string(verify_status_name(v.status))});
      return result;
    }
    state.accepted_hashes += difficulty(state.current_job->target);
    result.emit.push_back(HashAcceptFrame{state.accepted_hashes});
    JobFrame job = env.mint_job();
    state.current_job = job;
    state.phase = Phase::JobAssigned;
    result.emit.push_back(std::move(job));
    return result;
  }

  // authed/job/hash_accept are server-to-client frames
  result.alerts.push_back(protocol_error(
      "unexpected " + std::string(frame_type_name(incoming)) + " from client"));
  return result;
}

StepResult on_close(SessionState& state) {
  state.phase = Phase::Closed;
  return {};
}

}  // namespace cjlab::protocol
