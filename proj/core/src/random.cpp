#include "sagin/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sagin {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
}

RandomStream RandomStream::for_round(std::uint64_t master_seed, std::uint64_t index) {
    // Mix the round counter through splitmix64 twice so neighboring rounds
    // land far apart in seed space.
    std::uint64_t sm = master_seed ^ (0xA0761D6478BD642Full * (index + 1));
    splitmix64(sm);
    return RandomStream(splitmix64(sm));
}

std::uint64_t RandomStream::next_u64() {
    // xoshiro256++
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RandomStream::exponential() {
    return -std::log(uniform_pos());
}

double RandomStream::normal() {
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    return r * std::cos(2.0 * std::numbers::pi * uniform());
}

double RandomStream::gamma(double shape, double scale) {
    if (!(shape >= 1.0)) {
        throw std::domain_error("RandomStream::gamma: shape must be >= 1");
    }
    if (shape == std::floor(shape) && shape <= 16.0) {
        double sum = 0.0;
        const int k = static_cast<int>(shape);
        for (int i = 0; i < k; ++i) sum += exponential();
        return scale * sum;
    }
    // Marsaglia-Tsang squeeze method.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_pos();
        if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
}

long RandomStream::poisson(double mean) {
    if (mean < 0.0) throw std::domain_error("RandomStream::poisson: negative mean");
    if (mean == 0.0) return 0;
    if (mean < 30.0) {
        // Chop-down inversion.
        const double l = std::exp(-mean);
        long k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > l);
        return k - 1;
    }
    // PTRS transformed rejection (Hormann 1993).
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        double u = uniform() - 0.5;
        const double v = uniform();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<long>(k);
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
        const double rhs = -mean + k * std::log(mean) - std::lgamma(k + 1.0);
        if (lhs <= rhs) return static_cast<long>(k);
    }
}

double RandomStream::rayleigh(double sigma) {
    return sigma * std::sqrt(-2.0 * std::log(uniform_pos()));
}

}  // namespace sagin
