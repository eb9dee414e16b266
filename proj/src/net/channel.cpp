#include "soro/net/channel.hpp"

#include <stdexcept>

namespace soro::net {

void LoopbackChannel::send(const PacketBytes& bytes) {
  std::lock_guard lock(mutex_);
  queue_.push_back(bytes);
}

std::optional<PacketBytes> LoopbackChannel::try_recv() {
  std::lock_guard lock(mutex_);
  if (queue_.empty()) return std::nullopt;
  PacketBytes bytes = queue_.front();
  queue_.pop_front();
  return bytes;
}

LossyChannel::LossyChannel(std::shared_ptr<Channel> inner, double loss_prob, double reorder_prob,
                           unsigned long seed)
    : inner_(std::move(inner)), loss_prob_(loss_prob), reorder_prob_(reorder_prob), rng_(seed) {
  if (loss_prob_ < 0.0 || loss_prob_ >= 1.0)
    throw std::invalid_argument("LossyChannel: loss probability must be in [0,1)");
  if (reorder_prob_ < 0.0 || reorder_prob_ >= 1.0)
    throw std::invalid_argument("LossyChannel: reorder probability must be in [0,1)");
  if (!inner_) throw std::invalid_argument("LossyChannel: null inner channel");
}

void LossyChannel::send(const PacketBytes& bytes) {
  std::lock_guard lock(mutex_);
  if (uniform_(rng_) < loss_prob_) return;  // dropped on the wire
  if (held_) {
    // Deliver the delayed packet after the current one: a one-slot swap.
    inner_->send(bytes);
    inner_->send(*held_);
    held_.reset();
    return;
  }
  if (reorder_prob_ > 0.0 && uniform_(rng_) < reorder_prob_) {
    held_ = bytes;
    return;
  }
  inner_->send(bytes);
}

std::optional<PacketBytes> LossyChannel::try_recv() { return inner_->try_recv(); }

}  // namespace soro::net
