#include "mlsn/ccsds.hpp"

#include <cctype>

#include "mlsn/constants.hpp"
#include "mlsn/errors.hpp"

namespace mlsn {

std::uint16_t crc16_ccitt_false(std::span<const std::uint8_t> data) {
  std::uint16_t crc = 0xFFFF;
  for (std::uint8_t byte : data) {
    crc ^= static_cast<std::uint16_t>(byte) << 8;
    for (int bit = 0; bit < 8; ++bit)
      crc = (crc & 0x8000) ? static_cast<std::uint16_t>((crc << 1) ^ 0x1021)
                           : static_cast<std::uint16_t>(crc << 1);
  }
  return crc;
}

void SppPacket::validate() const {
  if (apid >= 1u << 11) throw ValidationError("spp: apid exceeds 11 bits");
  if (sequence_count >= 1u << 14) throw ValidationError("spp: sequence_count exceeds 14 bits");
  if (payload_length == 0) throw ValidationError("spp: payload_length must be positive");
  if (total_length() > consts::max_spp_packet_bytes)
    throw ValidationError("spp: total length " + std::to_string(total_length()) + " exceeds " +
                          std::to_string(consts::max_spp_packet_bytes));
}

void TcFrameHeader::validate() const {
  if (version >= 1u << 2) throw ValidationError("tc header: version exceeds 2 bits");
  if (spacecraft_id >= 1u << 10) throw ValidationError("tc header: spacecraft_id exceeds 10 bits");
  if (virtual_channel_id >= 1u << 6)
    throw ValidationError("tc header: virtual_channel_id exceeds 6 bits");
  if (frame_length_field >= 1u << 10)
    throw ValidationError("tc header: frame_length_field exceeds 10 bits");
  if (frame_length_field + 1u > consts::max_tc_frame_bytes)
    throw ValidationError("tc header: frame length " + std::to_string(frame_length_field + 1u) +
                          " exceeds " + std::to_string(consts::max_tc_frame_bytes));
}

SegmentationPlan plan_segmentation(std::size_t spp_length, std::size_t frame_size) {
  if (spp_length == 0 || spp_length > consts::max_spp_packet_bytes)
    throw ValidationError("segmentation: spp_length must be in (0, " +
                          std::to_string(consts::max_spp_packet_bytes) + "]");
  if (frame_size == 0 || frame_size > consts::max_tc_frame_bytes)
    throw ValidationError("segmentation: frame size must be in (0, " +
                          std::to_string(consts::max_tc_frame_bytes) + "]");
  SegmentationPlan plan;
  plan.frame_count = (spp_length + frame_size - 1) / frame_size;
  plan.frame_payload_sizes.assign(plan.frame_count, frame_size);
  const std::size_t tail = spp_length - (plan.frame_count - 1) * frame_size;
  plan.frame_payload_sizes.back() = tail;
  return plan;
}

std::vector<std::uint8_t> encode_tc_frame(const TcFrameHeader& h,
                                          std::span<const std::uint8_t> payload, bool with_fecf) {
  h.validate();
  const std::size_t total = TcFrameHeader::encoded_bytes + payload.size() + (with_fecf ? 2 : 0);
  if (total > consts::max_tc_frame_bytes)
    throw ValidationError("tc frame: " + std::to_string(total) + " octets exceeds " +
                          std::to_string(consts::max_tc_frame_bytes));
  if (h.frame_length_field != total - 1)
    throw ValidationError("tc frame: frame_length_field " + std::to_string(h.frame_length_field) +
                          " inconsistent with length " + std::to_string(total) + " (expected " +
                          std::to_string(total - 1) + ")");
  std::vector<std::uint8_t> out;
  out.reserve(total);
  out.push_back(static_cast<std::uint8_t>((h.version << 6) | (h.bypass_flag ? 0x20 : 0) |
                                          (h.control_command_flag ? 0x10 : 0) |
                                          ((h.spacecraft_id >> 8) & 0x03)));
  out.push_back(static_cast<std::uint8_t>(h.spacecraft_id & 0xFF));
  out.push_back(static_cast<std::uint8_t>((h.virtual_channel_id << 2) |
                                          ((h.frame_length_field >> 8) & 0x03)));
  out.push_back(static_cast<std::uint8_t>(h.frame_length_field & 0xFF));
  out.push_back(h.frame_sequence_number);
  out.insert(out.end(), payload.begin(), payload.end());
  if (with_fecf) {
    const std::uint16_t crc = crc16_ccitt_false(out);
    out.push_back(static_cast<std::uint8_t>(crc >> 8));
    out.push_back(static_cast<std::uint8_t>(crc & 0xFF));
  }
  return out;
}

DecodedTcFrame decode_tc_frame(std::span<const std::uint8_t> frame, bool with_fecf) {
  const std::size_t min_len = TcFrameHeader::encoded_bytes + (with_fecf ? 2 : 0);
  if (frame.size() < min_len)
    throw FormatError("tc frame: " + std::to_string(frame.size()) + " octets, need at least " +
                      std::to_string(min_len));
  if (with_fecf) {
    const std::uint16_t expected = crc16_ccitt_false(frame.subspan(0, frame.size() - 2));
    const std::uint16_t got = static_cast<std::uint16_t>((frame[frame.size() - 2] << 8) |
                                                         frame[frame.size() - 1]);
    if (expected != got)
      throw ChecksumError("tc frame: FECF mismatch");
  }
  DecodedTcFrame d;
  d.header.version = frame[0] >> 6;
  d.header.bypass_flag = (frame[0] & 0x20) != 0;
  d.header.control_command_flag = (frame[0] & 0x10) != 0;
  d.header.spacecraft_id = static_cast<std::uint16_t>(((frame[0] & 0x03) << 8) | frame[1]);
  d.header.virtual_channel_id = frame[2] >> 2;
  d.header.frame_length_field = static_cast<std::uint16_t>(((frame[2] & 0x03) << 8) | frame[3]);
  d.header.frame_sequence_number = frame[4];
  if (d.header.frame_length_field + 1u != frame.size())
    throw FormatError("tc frame: length field " + std::to_string(d.header.frame_length_field) +
                      " disagrees with " + std::to_string(frame.size()) + " octets");
  d.payload.assign(frame.begin() + TcFrameHeader::encoded_bytes,
                   frame.end() - (with_fecf ? 2 : 0));
  return d;
}

std::string to_hex(std::span<const std::uint8_t> data) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0F]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(const std::string& text) {
  std::vector<std::uint8_t> out;
  int nibble = -1;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (nibble >= 0) throw FormatError("hex: whitespace splits a byte");
      continue;
    }
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw FormatError(std::string("hex: invalid character '") + c + "'");
    if (nibble < 0) {
      nibble = v;
    } else {
      out.push_back(static_cast<std::uint8_t>((nibble << 4) | v));
      nibble = -1;
    }
  }
  if (nibble >= 0) throw FormatError("hex: odd number of digits");
  return out;
}

}  // namespace mlsn
