#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace dyntomo {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC'11). The whole draw sequence is a pure
// function of (seed, stream): the seed is the Philox key, the stream id
// occupies the upper half of the 128-bit counter, and the block index the
// lower half. Substreams never share output blocks, so trials can run in any
// order, or in parallel, and still replay bit-for-bit.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream), block_(0), buf_pos_(4), have_gauss_(false), gauss_(0.0) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    // Derives an independent stream. The mix is a bijection of
    // stream + (index+1)*phi, so distinct indices give distinct streams.
    SeededRng substream(std::uint64_t index) const {
        return SeededRng(seed_, mix64(stream_ + 0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t next_u64() {
        const std::uint32_t lo = next_u32();
        const std::uint32_t hi = next_u32();
        return (static_cast<std::uint64_t>(hi) << 32) | lo;
    }

    std::uint32_t next_u32() {
        if (buf_pos_ == 4) {
            buf_ = philox_block(block_++, stream_, seed_);
            buf_pos_ = 0;
        }
        return buf_[buf_pos_++];
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (no rejection, hence a fixed draw count).
    double gaussian() {
        if (have_gauss_) {
            have_gauss_ = false;
            return gauss_;
        }
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        gauss_ = radius * std::sin(angle);
        have_gauss_ = true;
        return radius * std::cos(angle);
    }

    // Re, Im independently N(0,1).
    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    // Philox4x32-10 on an explicit counter/key, exposed for the known-answer
    // tests that pin the implementation to the published vectors.
    static std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                                   std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ULL * ctr[0];
            const std::uint64_t p1 = 0xCD9E8D57ULL * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += 0x9E3779B9U;
            key[1] += 0xBB67AE85U;
        }
        return ctr;
    }

private:
    static std::array<std::uint32_t, 4> philox_block(std::uint64_t block, std::uint64_t stream,
                                                     std::uint64_t seed) {
        const std::array<std::uint32_t, 4> ctr = {
            static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
            static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                                  static_cast<std::uint32_t>(seed >> 32)};
        return philox4x32(ctr, key);
    }

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_;
    std::array<std::uint32_t, 4> buf_{};
    int buf_pos_;
    bool have_gauss_;
    double gauss_;
};

} // namespace dyntomo
