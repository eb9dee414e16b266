#include "soro/net/packet.hpp"

#include <cstring>

namespace soro::net {

namespace {

template <typename T>
void put_le(std::uint8_t* out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i)
    out[i] = static_cast<std::uint8_t>((value >> (8 * i)) & 0xFF);
}

template <typename T>
T get_le(const std::uint8_t* in) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    value |= static_cast<T>(in[i]) << (8 * i);
  return value;
}

}  // namespace

PacketBytes encode_packet(const DepthPacket& packet) {
  PacketBytes bytes{};
  put_le<std::uint32_t>(bytes.data(), packet.seq);
  put_le<std::uint64_t>(bytes.data() + 4, packet.timestamp_us);
  std::uint64_t depth_bits;
  std::memcpy(&depth_bits, &packet.depth_mm, sizeof(double));
  put_le<std::uint64_t>(bytes.data() + 12, depth_bits);
  bytes[20] = packet.status;
  return bytes;
}

DepthPacket decode_packet(const PacketBytes& bytes) {
  DepthPacket packet;
  packet.seq = get_le<std::uint32_t>(bytes.data());
  packet.timestamp_us = get_le<std::uint64_t>(bytes.data() + 4);
  const std::uint64_t depth_bits = get_le<std::uint64_t>(bytes.data() + 12);
  std::memcpy(&packet.depth_mm, &depth_bits, sizeof(double));
  packet.status = bytes[20];
  return packet;
}

}  // namespace soro::net
