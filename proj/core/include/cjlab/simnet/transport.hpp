#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace cjlab::simnet {

/// One endpoint of a duplex message channel carrying whole frames (on byte
/// transports each message is length-delimited: 4-byte big-endian length,
/// then the UTF-8 JSON text).
class MsgStream {
 public:
  virtual ~MsgStream() = default;

  /// Queues one message; false once the channel is closed.
  virtual bool send(std::string bytes) = 0;

  /// Fetches the next pending message, waiting at most timeout_ms (the
  /// in-process transport never waits). nullopt means nothing pending.
  virtual std::optional<std::string> poll(int timeout_ms = 0) = 0;

  virtual void close() = 0;
  virtual bool closed() const = 0;
};

/// In-process channel for the deterministic simulator. Both ends must be
/// driven from one thread; delivery order is FIFO per direction. Messages
/// queued before a close may still be drained.
std::pair<std::unique_ptr<MsgStream>, std::unique_ptr<MsgStream>>
make_inproc_pair();

}  // namespace cjlab::simnet
