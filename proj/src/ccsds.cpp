#include "eaglesim/ccsds.hpp"

namespace eaglesim::ccsds {

Packet make_packet(std::uint16_t apid, PacketType type, std::uint16_t seq_count,
                   std::vector<std::uint8_t> payload, bool sec_hdr_flag) {
    if (payload.empty()) throw PayloadEmpty();
    if (payload.size() > kMaxPayload) throw PayloadTooLarge();
    Packet p;
    p.header.version = 0;
    p.header.type = type;
    p.header.sec_hdr_flag = sec_hdr_flag;
    p.header.apid = static_cast<std::uint16_t>(apid & kApidMask);
    p.header.seq_flags = kSeqFlagsUnsegmented;
    p.header.seq_count = static_cast<std::uint16_t>(seq_count % kSeqModulus);
    p.header.data_length = static_cast<std::uint16_t>(payload.size() - 1);
    p.payload = std::move(payload);
    return p;
}

std::vector<std::uint8_t> encode_packet(const Packet& packet) {
    const auto& h = packet.header;
    if (packet.payload.empty()) throw PayloadEmpty();
    if (packet.payload.size() > kMaxPayload) throw PayloadTooLarge();
    if (h.data_length != packet.payload.size() - 1)
        throw std::logic_error("ccsds: data_length does not match payload size");

    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + packet.payload.size());
    out.push_back(static_cast<std::uint8_t>(((h.version & 0x07) << 5) |
                                            (static_cast<std::uint8_t>(h.type) << 4) |
                                            ((h.sec_hdr_flag ? 1 : 0) << 3) |
                                            ((h.apid >> 8) & 0x07)));
    out.push_back(static_cast<std::uint8_t>(h.apid & 0xFF));
    out.push_back(static_cast<std::uint8_t>(((h.seq_flags & 0x03) << 6) |
                                            ((h.seq_count >> 8) & 0x3F)));
    out.push_back(static_cast<std::uint8_t>(h.seq_count & 0xFF));
    out.push_back(static_cast<std::uint8_t>(h.data_length >> 8));
    out.push_back(static_cast<std::uint8_t>(h.data_length & 0xFF));
    out.insert(out.end(), packet.payload.begin(), packet.payload.end());
    return out;
}

Packet decode_packet(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kMinPacketSize) throw Truncated();

    Packet p;
    auto& h = p.header;
    h.version = static_cast<std::uint8_t>(bytes[0] >> 5);
    if (h.version != 0) throw BadVersion();
    h.type = static_cast<PacketType>((bytes[0] >> 4) & 0x01);
    h.sec_hdr_flag = ((bytes[0] >> 3) & 0x01) != 0;
    h.apid = static_cast<std::uint16_t>(((bytes[0] & 0x07) << 8) | bytes[1]);
    h.seq_flags = static_cast<std::uint8_t>(bytes[2] >> 6);
    h.seq_count = static_cast<std::uint16_t>(((bytes[2] & 0x3F) << 8) | bytes[3]);
    h.data_length = static_cast<std::uint16_t>((bytes[4] << 8) | bytes[5]);

    const std::size_t expected = kHeaderSize + static_cast<std::size_t>(h.data_length) + 1;
    if (bytes.size() != expected) throw Truncated();

    p.payload.assign(bytes.begin() + kHeaderSize, bytes.end());
    return p;
}

std::uint16_t next_seq(std::uint16_t counter) {
    return static_cast<std::uint16_t>((counter + 1u) % kSeqModulus);
}

}  // namespace eaglesim::ccsds
