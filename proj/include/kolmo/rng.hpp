#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace kolmo {

// Counter-based random streams (Philox4x32-10). Every sample index owns its
// own stream, addressed by (seed, stream id), so the generated numbers do not
// depend on thread count or generation order. All arithmetic is our own, which
// keeps banks bit-identical across platforms and standard-library versions.
class Philox4x32 {
public:
    Philox4x32(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

    std::array<std::uint32_t, 4> next_block() {
        std::array<std::uint32_t, 4> ctr{block_lo_, block_hi_, stream_[0], stream_[1]};
        if (++block_lo_ == 0) ++block_hi_;
        return encrypt(ctr, key_);
    }

    // One keyed permutation of an arbitrary counter; used by the known-answer
    // tests and by the seed-derivation helpers below.
    static std::array<std::uint32_t, 4> encrypt(std::array<std::uint32_t, 4> ctr,
                                                std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += 0x9E3779B9u;
                key[1] += 0xBB67AE85u;
            }
            const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

private:
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> stream_;
    std::uint32_t block_lo_ = 0;
    std::uint32_t block_hi_ = 0;
};

// splitmix64; used only to derive namespaced sub-seeds from the user seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Seed domains. The path bank and the Monte Carlo reference must never share
// streams, whatever the user seed; each gets seed XOR tag pushed through
// splitmix64 (documented in the README so runs can be reproduced externally).
inline constexpr std::uint64_t kBankSeedTag = 0x6B6E6162ull;      // "bank"
inline constexpr std::uint64_t kReferenceSeedTag = 0x666572ull;   // "ref"

inline std::uint64_t bank_seed(std::uint64_t user_seed) {
    return splitmix64(user_seed ^ kBankSeedTag);
}

inline std::uint64_t reference_seed(std::uint64_t user_seed) {
    return splitmix64(user_seed ^ kReferenceSeedTag);
}

// Standard normal draws on top of a Philox stream: one 128-bit block gives two
// 53-bit uniforms, Box-Muller turns them into two normals. No rejection steps,
// so the draw count per sample path is fixed and reproducible.
class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream) : gen_(seed, stream) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const auto b = gen_.next_block();
        const double u1 = 1.0 - to_unit(b[0], b[1]);   // (0, 1]; log stays finite
        const double u2 = to_unit(b[2], b[3]);         // [0, 1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static double to_unit(std::uint32_t hi, std::uint32_t lo) {
        const std::uint64_t v = (std::uint64_t{hi} << 32) | lo;
        return static_cast<double>(v >> 11) * 0x1.0p-53;
    }

    Philox4x32 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// FNV-1a over raw bytes; bank files and reuse-contract checks.
inline std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h = 0xCBF29CE484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ull;
    }
    return h;
}

} // namespace kolmo
