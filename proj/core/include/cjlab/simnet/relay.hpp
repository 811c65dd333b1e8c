#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "cjlab/simnet/transport.hpp"

namespace cjlab::simnet {

struct RelayConfig {
  std::string listen_endpoint = "relay.example:9191";
  std::string upstream_endpoint = "dropzone.example:9090";
};

/// Verbatim bidirectional forwarder: whatever arrives on one side is sent
/// unchanged out the other. It never originates frames; when the upstream
/// side closes, the client side is closed too.
class RelayLink {
 public:
  RelayLink(std::unique_ptr<MsgStream> client_side,
            std::unique_ptr<MsgStream> upstream_side);

  /// Moves all pending messages once in each direction; true on progress.
  bool pump();

  std::uint64_t forwarded_messages() const { return forwarded_; }

 private:
  std::unique_ptr<MsgStream> client_;
  std::unique_ptr<MsgStream> upstream_;
  std::uint64_t forwarded_ = 0;
};

}  // namespace cjlab::simnet
