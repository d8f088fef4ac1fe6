// SPDX-License-Identifier: Apache-2.0
//
// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// Stateless: every 128-bit block is a pure function of (seed, counter),
// so sampling is order-independent and parallel runs reproduce the
// serial stream bit for bit.

#pragma once

#include <array>
#include <cstdint>

namespace wppas {

namespace detail {

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         const std::array<std::uint32_t, 2>& key) {
    constexpr std::uint64_t M0 = 0xD2511F53ull;
    constexpr std::uint64_t M1 = 0xCD9E8D57ull;
    const std::uint64_t p0 = M0 * ctr[0];
    const std::uint64_t p1 = M1 * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace detail

/// One 10-round Philox4x32 block for the given key and 128-bit counter
/// (counter given as two 64-bit halves).
inline std::array<std::uint32_t, 4> philox4x32(std::uint64_t seed,
                                               std::uint64_t counter_lo,
                                               std::uint64_t counter_hi = 0) {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(counter_lo),
        static_cast<std::uint32_t>(counter_lo >> 32),
        static_cast<std::uint32_t>(counter_hi),
        static_cast<std::uint32_t>(counter_hi >> 32)};
    std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                        static_cast<std::uint32_t>(seed >> 32)};
    constexpr std::uint32_t W0 = 0x9E3779B9u;
    constexpr std::uint32_t W1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += W0;
            key[1] += W1;
        }
        detail::philox_round(ctr, key);
    }
    return ctr;
}

/// Uniform double in [0, 1) from 53 of 64 bits.
inline double uniform_from_bits(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t z = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

/// Two independent uniforms in [0, 1) for a given (seed, index).
inline std::array<double, 2> uniform_pair(std::uint64_t seed, std::uint64_t index) {
    const auto blk = philox4x32(seed, index);
    return {uniform_from_bits(blk[0], blk[1]), uniform_from_bits(blk[2], blk[3])};
}

}  // namespace wppas
