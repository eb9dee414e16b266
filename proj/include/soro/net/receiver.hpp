#pragma once

#include <optional>

#include "soro/net/packet.hpp"

namespace soro::net {

/// Frame-synchronous receive policy: exactly one depth value comes out per
/// frame period no matter what the wire did. A missing, late, or
/// tracking-invalid packet repeats the previous frame's depth; stale
/// (out-of-order) packets are discarded, never applied.
class FrameReceiver {
 public:
  /// Without a default depth the stream must open with a good packet
  /// within `startup_timeout_frames` steps or step() throws
  /// "stream never started".
  explicit FrameReceiver(std::optional<double> default_depth_mm = std::nullopt,
                         int startup_timeout_frames = 90);

  /// One frame tick: feed whatever arrived (nullopt when nothing did),
  /// get the depth to hand to the control loop.
  double step(const std::optional<DepthPacket>& incoming);

  const LinkStats& stats() const { return stats_; }

  /// Fold in the sender's final count once the stream ends, so trailing
  /// losses the receiver never saw enter the accounting identity.
  void finish(std::uint64_t sent_count);

 private:
  void apply_accounting(const DepthPacket& packet);
  double emit_repeat();

  LinkStats stats_;
  std::optional<double> last_depth_;
  std::uint32_t expected_seq_ = 0;
  int frames_without_start_ = 0;
  int startup_timeout_frames_;
};

}  // namespace soro::net
