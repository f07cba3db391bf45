#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eaglesim::wire {

// Big-endian field packing for every multi-byte payload field, one rule
// everywhere (matches CCSDS network byte order).

using Bytes = std::vector<std::uint8_t>;

inline void put_u8(Bytes& out, std::uint8_t v) { out.push_back(v); }

inline void put_u16(Bytes& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

inline void put_u32(Bytes& out, std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

inline void put_u64(Bytes& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

inline void put_i16(Bytes& out, std::int16_t v) {
    put_u16(out, static_cast<std::uint16_t>(v));
}

inline void put_f32(Bytes& out, float v) {
    put_u32(out, std::bit_cast<std::uint32_t>(v));
}

inline void put_string(Bytes& out, std::string_view s) {
    if (s.size() > 0xFFFF) throw std::length_error("wire string too long");
    put_u16(out, static_cast<std::uint16_t>(s.size()));
    out.insert(out.end(), s.begin(), s.end());
}

inline void put_bytes(Bytes& out, std::span<const std::uint8_t> b) {
    out.insert(out.end(), b.begin(), b.end());
}

struct TruncatedPayload : std::runtime_error {
    TruncatedPayload() : std::runtime_error("truncated payload") {}
};

struct TrailingBytes : std::runtime_error {
    TrailingBytes() : std::runtime_error("trailing bytes in payload") {}
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> buf) : buf_(buf) {}

    std::size_t remaining() const { return buf_.size() - pos_; }

    std::uint8_t u8() {
        need(1);
        return buf_[pos_++];
    }

    std::uint16_t u16() {
        need(2);
        std::uint16_t v = (static_cast<std::uint16_t>(buf_[pos_]) << 8) | buf_[pos_ + 1];
        pos_ += 2;
        return v;
    }

    std::uint32_t u32() {
        std::uint32_t v = 0;
        need(4);
        for (int i = 0; i < 4; ++i) v = (v << 8) | buf_[pos_ + i];
        pos_ += 4;
        return v;
    }

    std::uint64_t u64() {
        std::uint64_t v = 0;
        need(8);
        for (int i = 0; i < 8; ++i) v = (v << 8) | buf_[pos_ + i];
        pos_ += 8;
        return v;
    }

    std::int16_t i16() { return static_cast<std::int16_t>(u16()); }

    float f32() { return std::bit_cast<float>(u32()); }

    std::string string() {
        std::uint16_t n = u16();
        need(n);
        std::string s(reinterpret_cast<const char*>(buf_.data() + pos_), n);
        pos_ += n;
        return s;
    }

    Bytes bytes(std::size_t n) {
        need(n);
        Bytes b(buf_.begin() + static_cast<std::ptrdiff_t>(pos_),
                buf_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
        pos_ += n;
        return b;
    }

    Bytes rest() { return bytes(remaining()); }

    void expect_end() const {
        if (pos_ != buf_.size()) throw TrailingBytes();
    }

private:
    void need(std::size_t n) const {
        if (pos_ + n > buf_.size()) throw TruncatedPayload();
    }

    std::span<const std::uint8_t> buf_;
    std::size_t pos_ = 0;
};

}  // namespace eaglesim::wire
