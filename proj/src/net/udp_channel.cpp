#include <arpa/inet.h>
#include <fcntl.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>
#include <string>

#include "soro/net/channel.hpp"

namespace soro::net {

namespace {

class UdpChannel : public Channel {
 public:
  UdpChannel(int port, bool bind_receiver) {
    fd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
    if (fd_ < 0) throw std::runtime_error("UdpChannel: socket() failed");

    std::memset(&peer_, 0, sizeof(peer_));
    peer_.sin_family = AF_INET;
    peer_.sin_port = htons(static_cast<std::uint16_t>(port));
    peer_.sin_addr.s_addr = htonl(INADDR_LOOPBACK);

    if (bind_receiver) {
      sockaddr_in local = peer_;
      if (::bind(fd_, reinterpret_cast<sockaddr*>(&local), sizeof(local)) != 0) {
        ::close(fd_);
        throw std::runtime_error("UdpChannel: bind to port " + std::to_string(port) +
                                 " failed: " + std::strerror(errno));
      }
    }
    const int flags = ::fcntl(fd_, F_GETFL, 0);
    ::fcntl(fd_, F_SETFL, flags | O_NONBLOCK);
  }

  ~UdpChannel() override {
    if (fd_ >= 0) ::close(fd_);
  }

  void send(const PacketBytes& bytes) override {
    ::sendto(fd_, bytes.data(), bytes.size(), 0, reinterpret_cast<const sockaddr*>(&peer_),
             sizeof(peer_));
  }

  std::optional<PacketBytes> try_recv() override {
    PacketBytes bytes;
    const ssize_t got = ::recv(fd_, bytes.data(), bytes.size(), 0);
    if (got == static_cast<ssize_t>(bytes.size())) return bytes;
    return std::nullopt;  // nothing pending, or a runt datagram we ignore
  }

 private:
  int fd_ = -1;
  sockaddr_in peer_{};
};

}  // namespace

std::shared_ptr<Channel> make_udp_channel(int port, bool bind_receiver) {
  return std::make_shared<UdpChannel>(port, bind_receiver);
}

}  // namespace soro::net
