// rng.hpp — Portable seeded randomness. std::mt19937_64 output is pinned by
// the standard; distributions are hand-rolled here because std:: distribution
// implementations differ across standard libraries and would break the
// byte-identical determinism contract of the CLI.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace hotline {

using rng_t = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits
inline double uniform01(rng_t& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(rng_t& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer in [0, n)
inline std::size_t uniform_index(rng_t& rng, std::size_t n) {
    return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)) % n;
}

// Inverse-CDF sample from unnormalized nonnegative weights
inline std::size_t sample_discrete(rng_t& rng, const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("sample_discrete: negative weight");
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("sample_discrete: all weights zero");
    double u = uniform01(rng) * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

} // namespace hotline
