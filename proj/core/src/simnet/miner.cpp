#include "cjlab/simnet/miner.hpp"

#include <cmath>

#include "cjlab/protocol/pow.hpp"

namespace cjlab::simnet {

using protocol::Direction;
using protocol::Frame;

MinerClient::MinerClient(MinerConfig config, std::unique_ptr<MsgStream> conn,
                         const Clock& clock, protocol::FrameLog* log)
    : config_(std::move(config)),
      conn_(std::move(conn)),
      clock_(clock),
      log_(log),
      rng_(config_.seed ^ 0x4D494E45ULL) {
  totals_.duration_s = config_.duration_s;
}

void MinerClient::send_frame(const Frame& frame) {
  std::string bytes = protocol::encode(frame);
  if (log_) {
    log_->add(clock_.now_ms(), config_.session_label,
              Direction::ClientToServer, bytes);
  }
  conn_->send(std::move(bytes));
}

void MinerClient::start() {
  if (started_) return;
  started_ = true;
  protocol::AuthFrame auth;
  auth.site_key = config_.site_key;
  auth.auth_type = "anonymous";
  auth.goal = 0;
  send_frame(auth);
}

bool MinerClient::pump() {
  bool progress = false;
  while (auto bytes = conn_->poll()) {
    progress = true;
    if (log_) {
      log_->add(clock_.now_ms(), config_.session_label,
                Direction::ServerToClient, *bytes);
    }
    Frame frame;
    try {
      frame = protocol::decode(*bytes);
    } catch (const protocol::CodecError&) {
      continue;  // not ours to enforce; the server already alerted
    }
    if (auto* job = std::get_if<protocol::JobFrame>(&frame)) {
      job_ = *job;
      next_nonce_ = static_cast<std::uint32_t>(rng_());
    } else if (auto* accept = std::get_if<protocol::HashAcceptFrame>(&frame)) {
      totals_.accepted_hashes = accept->hashes;
      ++totals_.shares_accepted;
    }
    // authed carries the token; nothing to keep at this fidelity
  }
  return progress;
}

void MinerClient::run_slice(const std::function<void()>& pump_world) {
  if (!started_) {
    start();
    pump_world();
  }
  // tiny guard keeps floor() from losing a whole hash to 1-alpha rounding
  const auto budget_per_slice = static_cast<std::uint64_t>(std::floor(
      static_cast<double>(config_.h_max) * (1.0 - config_.alpha) + 1e-9));
  std::uint64_t budget = budget_per_slice;

  while (budget > 0) {
    if (!job_) {
      pump_world();
      if (!job_) break;  // no work to be had (keyless or server gone)
    }
    const auto result = protocol::solve(*job_, next_nonce_, budget);
    totals_.attempted_hashes += result.attempts;
    budget -= result.attempts;
    next_nonce_ += static_cast<std::uint32_t>(result.attempts);
    if (result.share) {
      protocol::SubmitFrame submit{job_->job_id, result.share->nonce,
                                   result.share->result};
      job_.reset();  // the server rotates jobs after every accepted share
      send_frame(submit);
      pump_world();
    }
  }
  if (conn_->closed() && totals_.note.empty()) {
    totals_.completed = false;
    totals_.note = "connection closed by server";
  }
}

MinerSummary MinerClient::summary() const {
  MinerSummary s = totals_;
  if (config_.duration_s > 0) {
    s.achieved_rate = static_cast<double>(s.accepted_hashes) /
                      static_cast<double>(config_.duration_s);
  }
  return s;
}

MinerSummary run_miner(MinerClient& miner, std::uint64_t duration_s,
                       VirtualClock& clock,
                       const std::function<void()>& pump_world) {
  for (std::uint64_t t = 0; t < duration_s; ++t) {
    miner.run_slice(pump_world);
    clock.advance_ms(1000);
  }
  return miner.summary();
}

}  // namespace cjlab::simnet
