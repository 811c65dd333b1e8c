#include "cjlab/simnet/server.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cjlab/protocol/pow.hpp"
#include "cjlab/simnet/tcp.hpp"

namespace cjlab::simnet {

using protocol::Direction;
using protocol::Frame;
using protocol::ServerEnv;
using protocol::SessionState;
using protocol::StepResult;

DropzoneServer::DropzoneServer(ServerConfig config, const Clock& clock,
                               protocol::FrameLog* log)
    : config_(std::move(config)),
      env_(config_.registered_keys, config_.target, config_.seed),
      clock_(clock),
      log_(log) {
  if (config_.registered_keys.empty()) {
    throw std::invalid_argument("server: key registry must not be empty");
  }
}

std::string DropzoneServer::attach(std::unique_ptr<MsgStream> peer) {
  Session session;
  session.id = "s" + std::to_string(next_session_++);
  session.peer = std::move(peer);
  sessions_.push_back(std::move(session));
  return sessions_.back().id;
}

bool DropzoneServer::pump() {
  bool progress = false;
  for (Session& session : sessions_) {
    while (auto bytes = session.peer->poll()) {
      progress = true;
      if (log_) {
        log_->add(clock_.now_ms(), session.id, Direction::ClientToServer,
                  *bytes);
      }
      StepResult result;
      try {
        Frame frame = protocol::decode(*bytes);
        result = protocol::step(session.state, frame, env_);
      } catch (const protocol::CodecError& e) {
        alerts_.push_back(protocol::Alert{
            protocol::Alert::Kind::ProtocolError, e.what()});
        continue;
      }
      for (const protocol::Alert& alert : result.alerts) {
        alerts_.push_back(alert);
      }
      for (const Frame& frame : result.emit) {
        std::string out = protocol::encode(frame);
        if (log_) {
          log_->add(clock_.now_ms(), session.id, Direction::ServerToClient,
                    out);
        }
        session.peer->send(std::move(out));
      }
      if (result.close_connection) {
        session.peer->close();
        break;
      }
    }
  }
  return progress;
}

std::uint64_t DropzoneServer::total_accepted_hashes() const {
  std::uint64_t total = 0;
  for (const Session& s : sessions_) total += s.state.accepted_hashes;
  return total;
}

std::uint64_t DropzoneServer::accepted_hashes(
    const std::string& session_id) const {
  for (const Session& s : sessions_) {
    if (s.id == session_id) return s.state.accepted_hashes;
  }
  throw std::invalid_argument("unknown session: " + session_id);
}

// ---------------------------------------------------------------------------

struct TcpDropzone::Impl {
  Impl(ServerConfig cfg, const std::string& host, std::uint16_t port)
      : config(std::move(cfg)),
        env(config.registered_keys, config.target, config.seed),
        listener(host, port) {
    if (config.registered_keys.empty()) {
      throw std::invalid_argument("server: key registry must not be empty");
    }
    acceptor = std::thread([this] { accept_loop(); });
  }

  ~Impl() { stop(); }

  void accept_loop() {
    while (running.load()) {
      auto peer = listener.accept(100);
      if (!peer) continue;
      std::lock_guard<std::mutex> lock(mutex);
      workers.emplace_back(
          [this, raw = peer.release()] { serve(std::unique_ptr<MsgStream>(raw)); });
    }
  }

  void serve(std::unique_ptr<MsgStream> peer) {
    SessionState state;
    while (running.load() && !peer->closed()) {
      auto bytes = peer->poll(100);
      if (!bytes) continue;
      StepResult result;
      try {
        Frame frame = protocol::decode(*bytes);
        std::lock_guard<std::mutex> lock(mutex);
        result = protocol::step(state, frame, env);
      } catch (const protocol::CodecError&) {
        continue;
      }
      for (const Frame& frame : result.emit) {
        peer->send(protocol::encode(frame));
      }
      if (result.close_connection) break;
    }
    protocol::on_close(state);
    std::lock_guard<std::mutex> lock(mutex);
    total_hashes += state.accepted_hashes;
  }

  void stop() {
    if (!running.exchange(false)) return;
    listener.close();
    if (acceptor.joinable()) acceptor.join();
    std::vector<std::thread> local;
    {
      std::lock_guard<std::mutex> lock(mutex);
      local.swap(workers);
    }
    for (auto& w : local) {
      if (w.joinable()) w.join();
    }
  }

  ServerConfig config;
  ServerEnv env;
  TcpListener listener;
  std::atomic<bool> running{true};
  std::thread acceptor;
  std::vector<std::thread> workers;
  std::mutex mutex;
  std::uint64_t total_hashes = 0;
};

TcpDropzone::TcpDropzone(ServerConfig config, const std::string& host,
                         std::uint16_t port)
    : impl_(std::make_unique<Impl>(std::move(config), host, port)) {}

TcpDropzone::~TcpDropzone() = default;

std::string TcpDropzone::endpoint() const { return impl_->listener.endpoint(); }

std::uint64_t TcpDropzone::total_accepted_hashes() const {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->total_hashes;
}

void TcpDropzone::stop() { impl_->stop(); }

}  // namespace cjlab::simnet
