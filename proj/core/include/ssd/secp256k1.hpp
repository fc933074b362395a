#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "ssd/bytes.hpp"

namespace ssd::secp256k1 {

// Compact recoverable ECDSA signature: r and s are 32-byte big-endian
// scalars, s always in the lower half of the curve order, recovery_id in
// {0, 1} (the parity of the nonce point's y coordinate).
struct compact_sig {
    std::array<std::uint8_t, 32> r{};
    std::array<std::uint8_t, 32> s{};
    std::uint8_t recovery_id = 0;
};

bool valid_private_key(const std::array<std::uint8_t, 32>& key);

// priv * G as a 64-byte uncompressed point (x || y). Throws errc::bad_key
// for scalars outside [1, n-1].
std::array<std::uint8_t, 64> derive_public(const std::array<std::uint8_t, 32>& priv);

bool is_on_curve(const std::array<std::uint8_t, 64>& pub);

// Deterministic ECDSA (RFC 6979 with HMAC-SHA256) over a 32-byte digest.
compact_sig sign(const std::array<std::uint8_t, 32>& digest,
                 const std::array<std::uint8_t, 32>& priv);

// Recovers the signing public key. Returns nullopt for any malformed or
// non-canonical signature (zero/overflowing scalars, high s, bad recovery
// point) rather than throwing.
std::optional<std::array<std::uint8_t, 64>> recover(
    const std::array<std::uint8_t, 32>& digest, const compact_sig& sig);

// In-place reduction mod the curve order; false if the result is zero.
bool reduce_scalar(std::array<std::uint8_t, 32>& inout);

}  // namespace ssd::secp256k1
