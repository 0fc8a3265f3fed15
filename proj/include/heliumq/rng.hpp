#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace heliumq {

// SplitMix64 (Steele, Lea, Flood 2014). Pinned as the project's random core:
// golden-file tests require the integer stream to be identical everywhere,
// which the standard-library distributions do not guarantee.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Counts successes over n Bernoulli trials; exact and portable.
    int binomial(int n, double p) {
        if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("binomial: p must be in [0,1]");
        int k = 0;
        for (int i = 0; i < n; ++i) {
            if (bernoulli(p)) ++k;
        }
        return k;
    }

    // Exponential with the given mean via inversion.
    double exponential(double mean) {
        if (mean <= 0.0) throw std::invalid_argument("exponential: mean must be > 0");
        return -mean * std::log1p(-uniform01());
    }

    // Standard normal via Box-Muller; the spare value is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace heliumq
