#pragma once

#include <cmath>
#include <cstdint>

namespace chainecon {

// 64-bit linear congruential generator with Knuth's MMIX constants
// (a = 6364136223846793005, c = 1442695040888963407, modulus 2^64).
// Small, fully specified, and reproducible across platforms; traces produced
// from the same seed are bit-identical everywhere.
class Lcg64 {
public:
    using result_type = std::uint64_t;

    explicit Lcg64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // Uniform in [0, n) via fixed-point multiply; avoids modulo bias.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Log-uniform on [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return lo * std::exp(std::log(hi / lo) * next_double());
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() >> 63) != 0; }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }
    std::uint64_t operator()() { return next(); }

private:
    std::uint64_t state_;
};

}  // namespace chainecon
