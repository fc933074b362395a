#pragma once

#include "ssd/bytes.hpp"

namespace ssd {

// Plain SHA-256; used by the RFC 6979 nonce derivation, not by any ledger
// hashing (that is keccak256).
digest32 sha256(byte_view data);
digest32 hmac_sha256(byte_view key, byte_view data);

}  // namespace ssd
