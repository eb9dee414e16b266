#include "soro/net/receiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace soro::net {

FrameReceiver::FrameReceiver(std::optional<double> default_depth_mm, int startup_timeout_frames)
    : last_depth_(default_depth_mm), startup_timeout_frames_(startup_timeout_frames) {}

void FrameReceiver::apply_accounting(const DepthPacket& packet) {
  const std::uint64_t gap = packet.seq - expected_seq_;  // seq >= expected here
  stats_.dropped += gap;
  stats_.max_gap = std::max(stats_.max_gap, gap);
  stats_.received += 1;
  stats_.highest_seq = std::max(stats_.highest_seq, packet.seq);
  stats_.any_received = true;
  expected_seq_ = packet.seq + 1;
}

double FrameReceiver::emit_repeat() {
  if (!last_depth_) {
    if (++frames_without_start_ > startup_timeout_frames_)
      throw std::runtime_error("FrameReceiver: stream never started");
    return 0.0;  // pre-start placeholder; callers normally configure a default
  }
  stats_.repeated += 1;
  return *last_depth_;
}

double FrameReceiver::step(const std::optional<DepthPacket>& incoming) {
  if (!incoming) return emit_repeat();

  const DepthPacket& packet = *incoming;
  if (stats_.any_received && packet.seq < expected_seq_) {
    // Stale data must never reach the loop after fresher data has.
    stats_.late_discarded += 1;
    return emit_repeat();
  }
  apply_accounting(packet);
  if (!packet.tracking_valid()) return emit_repeat();
  last_depth_ = packet.depth_mm;
  frames_without_start_ = 0;
  return *last_depth_;
}

void FrameReceiver::finish(std::uint64_t sent_count) {
  if (sent_count == 0) return;
  const std::uint32_t last_seq = static_cast<std::uint32_t>(sent_count - 1);
  if (!stats_.any_received) {
    stats_.dropped += sent_count;
    stats_.highest_seq = last_seq;
    stats_.any_received = true;
    expected_seq_ = last_seq + 1;
  } else if (last_seq >= expected_seq_) {
    stats_.dropped += static_cast<std::uint64_t>(last_seq) + 1 - expected_seq_;
    stats_.highest_seq = last_seq;
    expected_seq_ = last_seq + 1;
  }
}

}  // namespace soro::net
