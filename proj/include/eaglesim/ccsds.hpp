#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eaglesim::ccsds {

// CCSDS space packet primary header, 6 bytes big-endian:
//   byte 0: version(3) | type(1) | sec_hdr_flag(1) | apid[10:8](3)
//   byte 1: apid[7:0]
//   byte 2: seq_flags(2) | seq_count[13:8](6)
//   byte 3: seq_count[7:0]
//   bytes 4-5: data_length = payload byte count - 1
inline constexpr std::size_t kHeaderSize = 6;
inline constexpr std::size_t kMinPacketSize = kHeaderSize + 1;
inline constexpr std::size_t kMaxPayload = 65536;
inline constexpr std::uint16_t kApidMask = 0x07FF;
inline constexpr std::uint16_t kSeqModulus = 1u << 14;
inline constexpr std::uint8_t kSeqFlagsUnsegmented = 0b11;

enum class PacketType : std::uint8_t { Telemetry = 0, Command = 1 };

struct PrimaryHeader {
    std::uint8_t version = 0;
    PacketType type = PacketType::Telemetry;
    bool sec_hdr_flag = false;
    std::uint16_t apid = 0;
    std::uint8_t seq_flags = kSeqFlagsUnsegmented;
    std::uint16_t seq_count = 0;
    std::uint16_t data_length = 0;  // payload bytes - 1

    bool operator==(const PrimaryHeader&) const = default;
};

struct Packet {
    PrimaryHeader header;
    std::vector<std::uint8_t> payload;

    bool operator==(const Packet&) const = default;
};

struct CodecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PayloadEmpty : CodecError {
    PayloadEmpty() : CodecError("ccsds: empty payload forbidden") {}
};
struct PayloadTooLarge : CodecError {
    PayloadTooLarge() : CodecError("ccsds: payload exceeds 65536 bytes") {}
};
struct Truncated : CodecError {
    Truncated() : CodecError("ccsds: buffer length inconsistent with header") {}
};
struct BadVersion : CodecError {
    BadVersion() : CodecError("ccsds: unsupported packet version") {}
};

// Builds a packet with derived data_length and unsegmented seq_flags.
Packet make_packet(std::uint16_t apid, PacketType type, std::uint16_t seq_count,
                   std::vector<std::uint8_t> payload, bool sec_hdr_flag = false);

std::vector<std::uint8_t> encode_packet(const Packet& packet);

Packet decode_packet(std::span<const std::uint8_t> bytes);

// (counter + 1) mod 2^14
std::uint16_t next_seq(std::uint16_t counter);

}  // namespace eaglesim::ccsds
