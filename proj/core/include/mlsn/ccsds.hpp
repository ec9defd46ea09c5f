#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mlsn {

// CRC-16/CCITT-FALSE: polynomial 0x1021, init 0xFFFF, no reflection, no
// final xor. check("123456789") = 0x29B1.
std::uint16_t crc16_ccitt_false(std::span<const std::uint8_t> data);

// Space packet, header-level model only (no bit codec needed here).
struct SppPacket {
  std::uint16_t apid = 0;          // 11 bits
  std::uint16_t sequence_count = 0;  // 14 bits
  std::size_t payload_length = 0;  // user data octets

  static constexpr std::size_t header_bytes = 6;
  std::size_t total_length() const { return header_bytes + payload_length; }
  void validate() const;  // throws ValidationError
};

// TC transfer frame primary header, 5 octets, big-endian bit packing:
//   version(2) bypass(1) ctrl_cmd(1) spare(2) scid(10) vcid(6) length(10) seq(8)
// frame_length_field holds total frame octets minus one.
struct TcFrameHeader {
  std::uint8_t version = 0;
  bool bypass_flag = false;
  bool control_command_flag = false;
  std::uint16_t spacecraft_id = 0;
  std::uint8_t virtual_channel_id = 0;
  std::uint16_t frame_length_field = 0;
  std::uint8_t frame_sequence_number = 0;

  static constexpr std::size_t encoded_bytes = 5;
  void validate() const;

  bool operator==(const TcFrameHeader&) const = default;
};

struct SegmentationPlan {
  std::size_t frame_count = 0;
  std::vector<std::size_t> frame_payload_sizes;
};

// Ceil split of an SPP of spp_length bytes into frames of at most M bytes;
// every frame is full except possibly the last.
SegmentationPlan plan_segmentation(std::size_t spp_length, std::size_t frame_size);

// Header + payload + optional FECF (CRC over all preceding octets). The
// caller-supplied frame_length_field must match the produced length.
std::vector<std::uint8_t> encode_tc_frame(const TcFrameHeader& header,
                                          std::span<const std::uint8_t> payload,
                                          bool with_fecf = true);

struct DecodedTcFrame {
  TcFrameHeader header;
  std::vector<std::uint8_t> payload;
};

DecodedTcFrame decode_tc_frame(std::span<const std::uint8_t> frame, bool with_fecf = true);

// Lowercase contiguous hex, e.g. {0x20, 0x2a} -> "202a".
std::string to_hex(std::span<const std::uint8_t> data);

// Inverse of to_hex; interior whitespace is ignored. Throws FormatError.
std::vector<std::uint8_t> from_hex(const std::string& text);

}  // namespace mlsn
