#pragma once

#include <array>
#include <cstdint>

namespace soro::net {

/// One 30 Hz depth measurement on the wire: little-endian, 21 bytes,
/// fields in declaration order. No padding ever touches the wire; the
/// encode/decode pair is the single source of layout truth.
struct DepthPacket {
  std::uint32_t seq = 0;
  std::uint64_t timestamp_us = 0;  // microseconds since stream start
  double depth_mm = 0.0;
  std::uint8_t status = 0;

  static constexpr std::uint8_t kTrackingValid = 0x01;
  static constexpr std::uint8_t kOutOfRange = 0x02;

  bool tracking_valid() const { return status & kTrackingValid; }

  bool operator==(const DepthPacket&) const = default;
};

inline constexpr std::size_t kPacketWireSize = 21;
using PacketBytes = std::array<std::uint8_t, kPacketWireSize>;

PacketBytes encode_packet(const DepthPacket& packet);
DepthPacket decode_packet(const PacketBytes& bytes);

/// Stream accounting. After a stream ends,
/// received + dropped == highest seq seen + 1.
struct LinkStats {
  std::uint64_t sent = 0;
  std::uint64_t received = 0;
  std::uint64_t dropped = 0;
  std::uint64_t repeated = 0;        // frames served with the previous depth
  std::uint64_t late_discarded = 0;  // out-of-order arrivals thrown away
  std::uint32_t highest_seq = 0;
  bool any_received = false;
  std::uint64_t max_gap = 0;

  bool accounting_holds() const {
    return !any_received || received + dropped == static_cast<std::uint64_t>(highest_seq) + 1;
  }
};

}  // namespace soro::net
