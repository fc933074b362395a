#pragma once

#include <cstdint>
#include <string_view>

#include "ssd/bytes.hpp"

namespace ssd {

// Keccak-256 with the original 0x01 domain padding (the variant Ethereum
// uses), not NIST SHA3-256.
digest32 keccak256(byte_view data);
digest32 keccak256(std::string_view data);

}  // namespace ssd
