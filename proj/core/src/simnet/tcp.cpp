#include "cjlab/simnet/tcp.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>

namespace cjlab::simnet {

namespace {

void set_nonblocking(int fd) {
  const int flags = fcntl(fd, F_GETFL, 0);
  fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

class TcpStream final : public MsgStream {
 public:
  explicit TcpStream(int fd) : fd_(fd) {
    set_nonblocking(fd_);
    int one = 1;
    setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  }

  ~TcpStream() override { close(); }

  bool send(std::string bytes) override {
    if (fd_ < 0) return false;
    std::string wire(4, '\0');
    const auto len = static_cast<std::uint32_t>(bytes.size());
    wire[0] = static_cast<char>(len >> 24 & 0xFF);
    wire[1] = static_cast<char>(len >> 16 & 0xFF);
    wire[2] = static_cast<char>(len >> 8 & 0xFF);
    wire[3] = static_cast<char>(len & 0xFF);
    wire += bytes;
    std::size_t sent = 0;
    while (sent < wire.size()) {
      const ssize_t n = ::send(fd_, wire.data() + sent, wire.size() - sent, 0);
      if (n > 0) {
        sent += static_cast<std::size_t>(n);
        continue;
      }
      if (n < 0 && (errno == EAGAIN || errno == EWOULDBLOCK)) {
        pollfd pfd{fd_, POLLOUT, 0};
        ::poll(&pfd, 1, 1000);
        continue;
      }
      close();
      return false;
    }
    return true;
  }

  std::optional<std::string> poll(int timeout_ms) override {
    if (auto frame = extract_frame()) return frame;
    if (fd_ < 0) return std::nullopt;

    pollfd pfd{fd_, POLLIN, 0};
    if (::poll(&pfd, 1, timeout_ms) <= 0) return std::nullopt;

    char buf[4096];
    while (true) {
      const ssize_t n = ::recv(fd_, buf, sizeof buf, 0);
      if (n > 0) {
        rx_.append(buf, static_cast<std::size_t>(n));
        continue;
      }
      if (n < 0 && (errno == EAGAIN || errno == EWOULDBLOCK)) break;
      // peer closed or hard error
      ::close(fd_);
      fd_ = -1;
      break;
    }
    return extract_frame();
  }

  void close() override {
    if (fd_ >= 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }

  bool closed() const override { return fd_ < 0 && rx_.size() < 4; }

 private:
  std::optional<std::string> extract_frame() {
    if (rx_.size() < 4) return std::nullopt;
    const std::uint32_t len = static_cast<std::uint8_t>(rx_[0]) << 24 |
                              static_cast<std::uint8_t>(rx_[1]) << 16 |
                              static_cast<std::uint8_t>(rx_[2]) << 8 |
                              static_cast<std::uint8_t>(rx_[3]);
    if (rx_.size() < 4 + static_cast<std::size_t>(len)) return std::nullopt;
    std::string frame = rx_.substr(4, len);
    rx_.erase(0, 4 + static_cast<std::size_t>(len));
    return frame;
  }

  int fd_;
  std::string rx_;
};

}  // namespace

TcpListener::TcpListener(const std::string& host, std::uint16_t port)
    : host_(host) {
  fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd_ < 0) throw std::runtime_error("tcp: socket() failed");
  int one = 1;
  setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
    ::close(fd_);
    throw std::runtime_error("tcp: bad host address: " + host);
  }
  if (bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 ||
      listen(fd_, 16) != 0) {
    const std::string why = std::strerror(errno);
    ::close(fd_);
    throw std::runtime_error("tcp: bind/listen on " + host + " failed: " + why);
  }
  socklen_t len = sizeof addr;
  getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
  set_nonblocking(fd_);
}

TcpListener::~TcpListener() { close(); }

std::string TcpListener::endpoint() const {
  return host_ + ":" + std::to_string(port_);
}

std::unique_ptr<MsgStream> TcpListener::accept(int timeout_ms) {
  if (fd_ < 0) return nullptr;
  pollfd pfd{fd_, POLLIN, 0};
  if (::poll(&pfd, 1, timeout_ms) <= 0) return nullptr;
  const int client = ::accept(fd_, nullptr, nullptr);
  if (client < 0) return nullptr;
  return std::make_unique<TcpStream>(client);
}

void TcpListener::close() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

std::unique_ptr<MsgStream> tcp_connect(const std::string& host,
                                       std::uint16_t port, int timeout_ms) {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw std::runtime_error("tcp: socket() failed");

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
    ::close(fd);
    throw std::runtime_error("tcp: bad host address: " + host);
  }
  set_nonblocking(fd);
  if (connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 &&
      errno != EINPROGRESS) {
    ::close(fd);
    throw std::runtime_error("tcp: connect failed");
  }
  pollfd pfd{fd, POLLOUT, 0};
  if (::poll(&pfd, 1, timeout_ms) <= 0) {
    ::close(fd);
    throw std::runtime_error("tcp: connect timed out");
  }
  int err = 0;
  socklen_t len = sizeof err;
  getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &len);
  if (err != 0) {
    ::close(fd);
    throw std::runtime_error("tcp: connect failed: " +
                             std::string(std::strerror(err)));
  }
  return std::make_unique<TcpStream>(fd);
}

std::pair<std::string, std::uint16_t> parse_endpoint(const std::string& ep) {
  const auto colon = ep.rfind(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("endpoint must be host:port: " + ep);
  }
  return {ep.substr(0, colon),
          static_cast<std::uint16_t>(std::stoi(ep.substr(colon + 1)))};
}

}  // namespace cjlab::simnet
