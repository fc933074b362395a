#include "ssd/keccak.hpp"

#include <bit>
#include <cstring>

static_assert(std::endian::native == std::endian::little,
              "lane loads assume a little-endian host");

namespace ssd {

namespace {

constexpr int k_rounds = 24;
constexpr std::size_t k_rate = 136;  // 1088-bit rate for a 256-bit digest

constexpr std::uint64_t k_round_constants[k_rounds] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808AULL,
    0x8000000080008000ULL, 0x000000000000808BULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008AULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000AULL,
    0x000000008000808BULL, 0x800000000000008BULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800AULL, 0x800000008000000AULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// rho rotations and pi lane permutation, flattened over lane index x + 5y
constexpr int k_rho[25] = {0,  1,  62, 28, 27, 36, 44, 6,  55, 20, 3,  10, 43,
                           25, 39, 41, 45, 15, 21, 8,  18, 2,  61, 56, 14};

inline std::uint64_t rotl(std::uint64_t x, int n) {
    return n == 0 ? x : (x << n) | (x >> (64 - n));
}

void keccak_f(std::uint64_t a[25]) {
    for (int rnd = 0; rnd < k_rounds; ++rnd) {
        // theta
        std::uint64_t c[5], d[5];
        for (int x = 0; x < 5; ++x)
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (int x = 0; x < 5; ++x) d[x] = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
        for (int i = 0; i < 25; ++i) a[i] ^= d[i % 5];

        // rho + pi
        std::uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y + 5 * ((2 * x + 3 * y) % 5)] = rotl(a[x + 5 * y], k_rho[x + 5 * y]);

        // chi
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                a[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);

        // iota
        a[0] ^= k_round_constants[rnd];
    }
}

}  // namespace

digest32 keccak256(byte_view data) {
    std::uint64_t state[25] = {};
    std::size_t offset = 0;

    while (data.size() - offset >= k_rate) {
        for (std::size_t i = 0; i < k_rate / 8; ++i) {
            std::uint64_t lane;
            std::memcpy(&lane, data.data() + offset + i * 8, 8);
            state[i] ^= lane;  // little-endian host assumed (checked in CMake)
        }
        keccak_f(state);
        offset += k_rate;
    }

    std::uint8_t last[k_rate] = {};
    std::size_t tail = data.size() - offset;
    std::memcpy(last, data.data() + offset, tail);
    last[tail] = 0x01;
    last[k_rate - 1] |= 0x80;
    for (std::size_t i = 0; i < k_rate / 8; ++i) {
        std::uint64_t lane;
        std::memcpy(&lane, last + i * 8, 8);
        state[i] ^= lane;
    }
    keccak_f(state);

    digest32 out;
    std::memcpy(out.data.data(), state, 32);
    return out;
}

digest32 keccak256(std::string_view data) {
    return keccak256(byte_view(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

}  // namespace ssd
