#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "fod/error.hpp"

namespace fod {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace detail

// Stream tags keep independent random decisions on independent streams, so
// adding draws to one purpose never shifts another. Keys are
// (master_seed, tag, ids...).
namespace stream {
inline constexpr std::uint64_t cut_cube = 0x11;
inline constexpr std::uint64_t base_rotation = 0x12;
inline constexpr std::uint64_t foreign_objects = 0x13;
inline constexpr std::uint64_t scan_noise = 0x21;
inline constexpr std::uint64_t flatfield = 0x22;
inline constexpr std::uint64_t dataset_order = 0x31;
inline constexpr std::uint64_t dataset_shuffle = 0x32;
inline constexpr std::uint64_t dataset_angle = 0x33;
inline constexpr std::uint64_t testset_angle = 0x34;
} // namespace stream

/// Deterministic RNG stream addressed by a key. The same key always yields
/// the same sequence, independent of thread scheduling or call order
/// elsewhere, which is what makes parallel generation reproducible.
class KeyedRng {
  public:
    explicit KeyedRng(std::initializer_list<std::uint64_t> key) {
        state_ = 0x6a09e667f3bcc908ull; // arbitrary nonzero start
        for (std::uint64_t w : key) {
            state_ ^= w;
            (void)detail::splitmix64(state_);
        }
    }

    std::uint64_t next_u64() { return detail::splitmix64(state_); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n), bias-free.
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n == 0) throw ConfigError("uniform_int: n must be positive");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    /// Poisson draw with the given mean. Inversion by sequential search for
    /// small means, Hormann's PTRS transformed rejection for large ones.
    std::uint64_t poisson(double mean) {
        if (mean < 0.0 || !std::isfinite(mean))
            throw ConfigError("poisson: mean must be finite and non-negative");
        if (mean == 0.0) return 0;
        if (mean < 10.0) return poisson_knuth(mean);
        return poisson_ptrs(mean);
    }

  private:
    std::uint64_t poisson_knuth(double mean) {
        const double limit = std::exp(-mean);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

    std::uint64_t poisson_ptrs(double mean) {
        const double b = 0.931 + 2.53 * std::sqrt(mean);
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double v_r = 0.9277 - 3.6224 / (b - 2.0);
        const double log_mean = std::log(mean);
        while (true) {
            const double u = uniform() - 0.5;
            const double v = uniform();
            const double us = 0.5 - std::abs(u);
            const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            const double k = kf;
            const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
            const double rhs = k * log_mean - mean - std::lgamma(k + 1.0);
            if (lhs <= rhs) return static_cast<std::uint64_t>(kf);
        }
    }

    std::uint64_t state_;
};

} // namespace fod
