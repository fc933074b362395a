#include "ssd/bytes.hpp"

#include "ssd/errors.hpp"

namespace ssd {

namespace {
constexpr char k_hex_digits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}
}  // namespace

std::string to_hex(byte_view data) {
    std::string out;
    out.reserve(data.size() * 2);
    for (auto b : data) {
        out.push_back(k_hex_digits[b >> 4]);
        out.push_back(k_hex_digits[b & 0xF]);
    }
    return out;
}

std::string to_hex0x(byte_view data) {
    return "0x" + to_hex(data);
}

bytes from_hex(std::string_view hex) {
    if (hex.size() >= 2 && hex[0] == '0' && hex[1] == 'x') hex.remove_prefix(2);
    if (hex.size() % 2 != 0) fail(errc::parse_error, "odd-length hex string");
    bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_value(hex[i]);
        int lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0) fail(errc::parse_error, "invalid hex digit");
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

template <std::size_t N>
fixed_bytes<N> fixed_bytes<N>::from_hex(std::string_view hex) {
    bytes raw = ssd::from_hex(hex);
    if (raw.size() != N)
        fail(errc::parse_error,
             "expected " + std::to_string(N) + " bytes, got " + std::to_string(raw.size()));
    fixed_bytes<N> out;
    std::copy(raw.begin(), raw.end(), out.data.begin());
    return out;
}

template struct fixed_bytes<20>;
template struct fixed_bytes<32>;
template struct fixed_bytes<64>;

void append(bytes& out, byte_view more) {
    out.insert(out.end(), more.begin(), more.end());
}

void append_u16_be(bytes& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void append_u32_be(bytes& out, std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void append_u64_be(bytes& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

}  // namespace ssd
