#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "pairid/session/wire.hpp"

namespace pairid::session {

/// Ordered, reliable delivery of frames between two peers. receive() throws
/// TransportClosed when the peer has gone or the timeout passes.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual void send(const Frame& frame) = 0;
  virtual Frame receive() = 0;
};

inline constexpr std::chrono::milliseconds kDefaultTimeout{10000};

/// In-memory pair of connected endpoints, safe to use from two threads.
/// Each endpoint keeps the exact bytes it sent.
class LoopbackEndpoint final : public Transport {
 public:
  struct Channel;

  LoopbackEndpoint(std::shared_ptr<Channel> out, std::shared_ptr<Channel> in, std::chrono::milliseconds timeout);
  ~LoopbackEndpoint() override;

  void send(const Frame& frame) override;
  Frame receive() override;
  const Bytes& sent_bytes() const { return sent_; }

 private:
  std::shared_ptr<Channel> out_;
  std::shared_ptr<Channel> in_;
  std::chrono::milliseconds timeout_;
  Bytes sent_;
};

std::pair<std::unique_ptr<LoopbackEndpoint>, std::unique_ptr<LoopbackEndpoint>> make_loopback(
    std::chrono::milliseconds timeout = kDefaultTimeout);

/// Frames over a pair of file descriptors (stdio, pipes, sockets).
class FdTransport final : public Transport {
 public:
  FdTransport(int in_fd, int out_fd, std::chrono::milliseconds timeout = kDefaultTimeout, bool owns = false);
  ~FdTransport() override;
  FdTransport(const FdTransport&) = delete;
  FdTransport& operator=(const FdTransport&) = delete;

  void send(const Frame& frame) override;
  Frame receive() override;

 private:
  void read_exact(std::uint8_t* dst, std::size_t n);

  int in_;
  int out_;
  std::chrono::milliseconds timeout_;
  bool owns_;
};

/// "host:port" or ":port"; an empty host means 127.0.0.1.
std::pair<std::string, std::string> split_address(const std::string& addr);

/// Listens on `addr`, accepts one connection and closes the listener.
/// `on_listening` receives the bound port (useful with port 0).
std::unique_ptr<FdTransport> tcp_accept_one(const std::string& addr, std::chrono::milliseconds timeout,
                                            const std::function<void(unsigned)>& on_listening = {});
/// Connects to `addr`, retrying until the timeout while the peer is not up.
std::unique_ptr<FdTransport> tcp_connect(const std::string& addr, std::chrono::milliseconds timeout);

}  // namespace pairid::session
