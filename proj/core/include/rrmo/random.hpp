#pragma once

#include <cstdint>
#include <random>

#include "rrmo/bitstring.hpp"

namespace rrmo {

/// Deterministic random source. The engine is std::mt19937_64 seeded with
/// the single 64-bit run seed; all distributions below are implemented here
/// rather than with <random> distribution templates, which the standard
/// leaves implementation-defined. Identical seeds therefore give identical
/// draw sequences on every platform.
///
/// A source is single-owner: concurrent runs each derive their own from
/// (master seed, run index).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() {
        ++draws_;
        return engine_();
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound), bound >= 1. Lemire's method with
    /// rejection, unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        while (true) {
            std::uint64_t x = next_u64();
            unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
            auto lo = static_cast<std::uint64_t>(m);
            if (lo < bound) {
                std::uint64_t threshold = (0 - bound) % bound;
                if (lo < threshold) continue;
            }
            return static_cast<std::uint64_t>(m >> 64);
        }
    }

    bool next_bernoulli(double p) { return next_double() < p; }

    /// n independent fair bits packed into a BitString.
    BitString random_bits(int n) {
        BitString x(n);
        for (auto& w : x.words()) w = next_u64();
        x.mask_tail();
        return x;
    }

    /// Engine invocations so far; used by tests to pin draw behavior.
    std::uint64_t draw_count() const { return draws_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t draws_ = 0;
};

}  // namespace rrmo
