#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <random>

#include "soro/net/packet.hpp"

namespace soro::net {

/// One-way datagram transport: fire-and-forget send, non-blocking receive.
/// Implementations are safe for one producer and one consumer.
class Channel {
 public:
  virtual ~Channel() = default;
  virtual void send(const PacketBytes& bytes) = 0;
  virtual std::optional<PacketBytes> try_recv() = 0;
};

/// In-process queue transport.
class LoopbackChannel : public Channel {
 public:
  void send(const PacketBytes& bytes) override;
  std::optional<PacketBytes> try_recv() override;

 private:
  std::mutex mutex_;
  std::deque<PacketBytes> queue_;
};

/// Deterministic loss/duplication injection around another channel. Jitter
/// is modeled as occasional reordering of adjacent packets (a swap), which
/// is the part of jitter a frame-synchronous receiver can observe.
class LossyChannel : public Channel {
 public:
  LossyChannel(std::shared_ptr<Channel> inner, double loss_prob, double reorder_prob,
               unsigned long seed);

  void send(const PacketBytes& bytes) override;
  std::optional<PacketBytes> try_recv() override;

 private:
  std::shared_ptr<Channel> inner_;
  double loss_prob_;
  double reorder_prob_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::optional<PacketBytes> held_;  // packet delayed for one slot
  std::mutex mutex_;
};

/// Real-socket transport bound to localhost UDP; see udp_channel.cpp.
std::shared_ptr<Channel> make_udp_channel(int port, bool bind_receiver);

}  // namespace soro::net
