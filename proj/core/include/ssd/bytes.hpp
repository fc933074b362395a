#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssd {

using bytes = std::vector<std::uint8_t>;
using byte_view = std::span<const std::uint8_t>;

// Lowercase hex, no prefix.
std::string to_hex(byte_view data);
// Lowercase hex with 0x prefix (the external rendering for all byte values).
std::string to_hex0x(byte_view data);

// Strict parser: requires an even number of lowercase hex digits, optionally
// 0x-prefixed. Uppercase digits are rejected so that canonical encodings
// round-trip byte-exactly.
bytes from_hex(std::string_view hex);

template <std::size_t N>
struct fixed_bytes {
    std::array<std::uint8_t, N> data{};

    auto operator<=>(const fixed_bytes&) const = default;

    bool is_zero() const {
        for (auto b : data)
            if (b != 0) return false;
        return true;
    }

    std::string hex() const { return to_hex0x(byte_view(data)); }

    static fixed_bytes from_hex(std::string_view hex);

    std::uint8_t* begin() { return data.data(); }
    std::uint8_t* end() { return data.data() + N; }
    const std::uint8_t* begin() const { return data.data(); }
    const std::uint8_t* end() const { return data.data() + N; }
    std::size_t size() const { return N; }
};

using digest32 = fixed_bytes<32>;
using address = fixed_bytes<20>;

inline const address& zero_address() {
    static const address z{};
    return z;
}

void append(bytes& out, byte_view more);
void append_u16_be(bytes& out, std::uint16_t v);
void append_u32_be(bytes& out, std::uint32_t v);
void append_u64_be(bytes& out, std::uint64_t v);

}  // namespace ssd
