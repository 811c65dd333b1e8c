#include "cjlab/simnet/relay.hpp"

namespace cjlab::simnet {

RelayLink::RelayLink(std::unique_ptr<MsgStream> client_side,
                     std::unique_ptr<MsgStream> upstream_side)
    : client_(std::move(client_side)), upstream_(std::move(upstream_side)) {}

bool RelayLink::pump() {
  bool progress = false;
  while (auto bytes = client_->poll()) {
    progress = true;
    ++forwarded_;
    upstream_->send(std::move(*bytes));
  }
  while (auto bytes = upstream_->poll()) {
    progress = true;
    ++forwarded_;
    client_->send(std::move(*bytes));
  }
  if (upstream_->closed() && !client_->closed()) {
    client_->close();
    progress = true;
  }
  return progress;
}

}  // namespace cjlab::simnet
