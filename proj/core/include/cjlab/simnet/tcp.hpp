#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "cjlab/simnet/transport.hpp"

namespace cjlab::simnet {

/// TCP binding of the length-delimited frame transport (real-time mode).
class TcpListener {
 public:
  /// Binds and listens on host:port; port 0 picks an ephemeral port.
  /// Throws std::runtime_error on failure.
  TcpListener(const std::string& host, std::uint16_t port);
  ~TcpListener();

  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  std::uint16_t port() const { return port_; }
  std::string endpoint() const;  // "host:port"

  /// Waits up to timeout_ms for a connection; nullptr on timeout.
  std::unique_ptr<MsgStream> accept(int timeout_ms);

  void close();

 private:
  int fd_ = -1;
  std::string host_;
  std::uint16_t port_ = 0;
};

/// Connects to host:port; throws std::runtime_error on failure.
std::unique_ptr<MsgStream> tcp_connect(const std::string& host,
                                       std::uint16_t port, int timeout_ms);

/// Splits "host:port". Throws std::invalid_argument on a missing port.
std::pair<std::string, std::uint16_t> parse_endpoint(const std::string& ep);

}  // namespace cjlab::simnet
