#include "pairid/session/transport.hpp"

#include <netdb.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>
#include <thread>

namespace pairid::session {

struct LoopbackEndpoint::Channel {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<Bytes> frames;
  bool closed = false;
};

LoopbackEndpoint::LoopbackEndpoint(std::shared_ptr<Channel> out, std::shared_ptr<Channel> in,
                                   std::chrono::milliseconds timeout)
    : out_(std::move(out)), in_(std::move(in)), timeout_(timeout) {}

LoopbackEndpoint::~LoopbackEndpoint() {
  std::lock_guard lock(out_->mu);
  out_->closed = true;
  out_->cv.notify_all();
}

void LoopbackEndpoint::send(const Frame& frame) {
  Bytes bytes = frame_encode(frame);
  sent_.insert(sent_.end(), bytes.begin(), bytes.end());
  std::lock_guard lock(out_->mu);
  if (out_->closed) fail(Errc::TransportClosed, "loopback channel closed");
  out_->frames.push_back(std::move(bytes));
  out_->cv.notify_all();
}

Frame LoopbackEndpoint::receive() {
  std::unique_lock lock(in_->mu);
  if (!in_->cv.wait_for(lock, timeout_, [&] { return !in_->frames.empty() || in_->closed; })) {
    fail(Errc::TransportClosed, "loopback receive timed out");
  }
  if (in_->frames.empty()) fail(Errc::TransportClosed, "peer closed the loopback channel");
  Bytes bytes = std::move(in_->frames.front());
  in_->frames.pop_front();
  return frame_decode(bytes);
}

std::pair<std::unique_ptr<LoopbackEndpoint>, std::unique_ptr<LoopbackEndpoint>> make_loopback(
    std::chrono::milliseconds timeout) {
  auto ab = std::make_shared<LoopbackEndpoint::Channel>();
  auto ba = std::make_shared<LoopbackEndpoint::Channel>();
  return {std::make_unique<LoopbackEndpoint>(ab, ba, timeout), std::make_unique<LoopbackEndpoint>(ba, ab, timeout)};
}

FdTransport::FdTransport(int in_fd, int out_fd, std::chrono::milliseconds timeout, bool owns)
    : in_(in_fd), out_(out_fd), timeout_(timeout), owns_(owns) {}

FdTransport::~FdTransport() {
  if (!owns_) return;
  ::close(in_);
  if (out_ != in_) ::close(out_);
}

void FdTransport::send(const Frame& frame) {
  const Bytes bytes = frame_encode(frame);
  std::size_t done = 0;
  while (done < bytes.size()) {
    const ssize_t n = ::write(out_, bytes.data() + done, bytes.size() - done);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) fail(Errc::TransportClosed, std::string("write failed: ") + std::strerror(errno));
    done += static_cast<std::size_t>(n);
  }
}

void FdTransport::read_exact(std::uint8_t* dst, std::size_t n) {
  const auto deadline = std::chrono::steady_clock::now() + timeout_;
  std::size_t done = 0;
  while (done < n) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) fail(Errc::TransportClosed, "receive timed out");
    pollfd pfd{in_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
    if (ready < 0 && errno == EINTR) continue;
    if (ready < 0) fail(Errc::TransportClosed, std::string("poll failed: ") + std::strerror(errno));
    if (ready == 0) fail(Errc::TransportClosed, "receive timed out");
    const ssize_t got = ::read(in_, dst + done, n - done);
    if (got < 0 && errno == EINTR) continue;
    if (got < 0) fail(Errc::TransportClosed, std::string("read failed: ") + std::strerror(errno));
    if (got == 0) fail(Errc::TransportClosed, "peer closed the connection");
    done += static_cast<std::size_t>(got);
  }
}

Frame FdTransport::receive() {
  Bytes buf(4);
  read_exact(buf.data(), 4);
  const std::uint64_t len = get_be(buf);
  if (len == 0 || len > kMaxPayload + 1) fail(Errc::LengthMismatch, "bad frame length " + std::to_string(len));
  buf.resize(4 + len);
  read_exact(buf.data() + 4, len);
  return frame_decode(buf);
}

std::pair<std::string, std::string> split_address(const std::string& addr) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) fail(Errc::InvalidArgument, "address '" + addr + "' lacks ':port'");
  std::string host = addr.substr(0, colon);
  const std::string port = addr.substr(colon + 1);
  if (port.empty()) fail(Errc::InvalidArgument, "address '" + addr + "' lacks a port");
  if (host.empty()) host = "127.0.0.1";
  return {host, port};
}

namespace {

struct AddrInfo {
  addrinfo* list = nullptr;
  ~AddrInfo() {
    if (list) ::freeaddrinfo(list);
  }
};

void resolve(const std::string& addr, bool passive, AddrInfo& out) {
  const auto [host, port] = split_address(addr);
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  if (passive) hints.ai_flags = AI_PASSIVE;
  const int rc = ::getaddrinfo(host.c_str(), port.c_str(), &hints, &out.list);
  if (rc != 0) fail(Errc::InvalidArgument, "cannot resolve '" + addr + "': " + ::gai_strerror(rc));
}

unsigned bound_port(int fd) {
  sockaddr_storage ss{};
  socklen_t len = sizeof ss;
  if (::getsockname(fd, reinterpret_cast<sockaddr*>(&ss), &len) != 0) return 0;
  if (ss.ss_family == AF_INET) return ntohs(reinterpret_cast<sockaddr_in*>(&ss)->sin_port);
  if (ss.ss_family == AF_INET6) return ntohs(reinterpret_cast<sockaddr_in6*>(&ss)->sin6_port);
  return 0;
}

}  // namespace

std::unique_ptr<FdTransport> tcp_accept_one(const std::string& addr, std::chrono::milliseconds timeout,
                                            const std::function<void(unsigned)>& on_listening) {
  AddrInfo ai;
  resolve(addr, true, ai);
  int listener = -1;
  for (addrinfo* a = ai.list; a; a = a->ai_next) {
    listener = ::socket(a->ai_family, a->ai_socktype, a->ai_protocol);
    if (listener < 0) continue;
    const int one = 1;
    ::setsockopt(listener, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    if (::bind(listener, a->ai_addr, a->ai_addrlen) == 0 && ::listen(listener, 1) == 0) break;
    ::close(listener);
    listener = -1;
  }
  if (listener < 0) fail(Errc::TransportClosed, "cannot listen on " + addr + ": " + std::strerror(errno));
  if (on_listening) on_listening(bound_port(listener));

  pollfd pfd{listener, POLLIN, 0};
  const int ready = ::poll(&pfd, 1, static_cast<int>(timeout.count()));
  if (ready <= 0) {
    ::close(listener);
    fail(Errc::TransportClosed, "no peer connected to " + addr + " before the timeout");
  }
  const int fd = ::accept(listener, nullptr, nullptr);
  ::close(listener);
  if (fd < 0) fail(Errc::TransportClosed, std::string("accept failed: ") + std::strerror(errno));
  return std::make_unique<FdTransport>(fd, fd, timeout, true);
}

std::unique_ptr<FdTransport> tcp_connect(const std::string& addr, std::chrono::milliseconds timeout) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  for (;;) {
    AddrInfo ai;
    resolve(addr, false, ai);
    for (addrinfo* a = ai.list; a; a = a->ai_next) {
      const int fd = ::socket(a->ai_family, a->ai_socktype, a->ai_protocol);
      if (fd < 0) continue;
      if (::connect(fd, a->ai_addr, a->ai_addrlen) == 0) return std::make_unique<FdTransport>(fd, fd, timeout, true);
      ::close(fd);
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      fail(Errc::TransportClosed, "cannot connect to " + addr + ": " + std::strerror(errno));
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
}

}  // namespace pairid::session
