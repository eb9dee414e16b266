#pragma once

#include <functional>

#include "soro/net/channel.hpp"
#include "soro/net/packet.hpp"

namespace soro::net {

/// Timing summary of a paced send run.
struct PacingReport {
  LinkStats stats;
  double mean_period_s = 0.0;  // measured wall-clock mean between sends
  double duration_s = 0.0;
};

/// Emits one packet per 1/rate_hz period using a drift-free absolute
/// schedule (sleep-until). Timestamps are stream-relative in microseconds
/// and strictly increasing. `source` supplies the depth for each frame.
PacingReport paced_sender(const std::function<double(std::uint32_t)>& source, double rate_hz,
                          std::uint64_t frame_count, Channel& channel);

/// Frame packetizer shared by the paced sender and the virtual-time
/// simulation path.
DepthPacket make_frame(std::uint32_t seq, double rate_hz, double depth_mm, bool tracking_valid,
                       bool out_of_range = false);

}  // namespace soro::net
