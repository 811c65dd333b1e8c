#include "cjlab/simnet/transport.hpp"

#include <deque>

namespace cjlab::simnet {

namespace {

struct InprocChannel {
  std::deque<std::string> a_to_b;
  std::deque<std::string> b_to_a;
  bool closed = false;
};

class InprocEnd final : public MsgStream {
 public:
  InprocEnd(std::shared_ptr<InprocChannel> channel, bool is_a)
      : channel_(std::move(channel)), is_a_(is_a) {}

  bool send(std::string bytes) override {
    if (channel_->closed) return false;
    (is_a_ ? channel_->a_to_b : channel_->b_to_a).push_back(std::move(bytes));
    return true;
  }

  std::optional<std::string> poll(int) override {
    auto& inbox = is_a_ ? channel_->b_to_a : channel_->a_to_b;
    if (inbox.empty()) return std::nullopt;
    std::string out = std::move(inbox.front());
    inbox.pop_front();
    return out;
  }

  void close() override { channel_->closed = true; }
  bool closed() const override { return channel_->closed; }

 private:
  std::shared_ptr<InprocChannel> channel_;
  bool is_a_;
};

}  // namespace

std::pair<std::unique_ptr<MsgStream>, std::unique_ptr<MsgStream>>
make_inproc_pair() {
  auto channel = std::make_shared<InprocChannel>();
  return {std::make_unique<InprocEnd>(channel, true),
          std::make_unique<InprocEnd>(channel, false)};
}

}  // namespace cjlab::simnet
