#include "soro/net/sender.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace soro::net {

DepthPacket make_frame(std::uint32_t seq, double rate_hz, double depth_mm, bool tracking_valid,
                       bool out_of_range) {
  DepthPacket packet;
  packet.seq = seq;
  packet.timestamp_us =
      static_cast<std::uint64_t>(std::llround(static_cast<double>(seq) * 1e6 / rate_hz));
  packet.depth_mm = depth_mm;
  packet.status = (tracking_valid ? DepthPacket::kTrackingValid : 0) |
                  (out_of_range ? DepthPacket::kOutOfRange : 0);
  return packet;
}

PacingReport paced_sender(const std::function<double(std::uint32_t)>& source, double rate_hz,
                          std::uint64_t frame_count, Channel& channel) {
  if (rate_hz <= 0.0) throw std::invalid_argument("paced_sender: rate must be positive");

  using clock = std::chrono::steady_clock;
  const auto period =
      std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(1.0 / rate_hz));

  PacingReport report;
  const auto start = clock::now();
  auto deadline = start;
  for (std::uint32_t seq = 0; seq < frame_count; ++seq) {
    std::this_thread::sleep_until(deadline);
    channel.send(encode_packet(make_frame(seq, rate_hz, source(seq), true)));
    report.stats.sent += 1;
    deadline += period;
  }
  const auto elapsed = std::chrono::duration<double>(clock::now() - start).count();
  report.duration_s = elapsed;
  if (frame_count > 1)
    report.mean_period_s = elapsed / static_cast<double>(frame_count - 1);
  return report;
}

}  // namespace soro::net
