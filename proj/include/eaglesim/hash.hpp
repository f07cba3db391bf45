#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace eaglesim {

// FNV-1a, 64-bit. Used for file content hashes in sync manifests and for
// deriving per-label RNG stream seeds. Stable across platforms by definition.
inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

inline std::uint64_t fnv1a64(std::span<const std::uint8_t> data,
                             std::uint64_t seed = kFnvOffset) {
    std::uint64_t h = seed;
    for (std::uint8_t b : data) {
        h ^= b;
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t seed = kFnvOffset) {
    std::uint64_t h = seed;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= kFnvPrime;
    }
    return h;
}

// splitmix64 finalizer; mixes a master seed with a label hash into a
// well-distributed stream seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace eaglesim
