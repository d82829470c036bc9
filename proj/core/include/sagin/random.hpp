#pragma once

#include <cstdint>

namespace sagin {

/// Deterministic random stream (xoshiro256++ seeded through splitmix64).
/// Hand-rolled so simulation results are bit-identical across standard
/// libraries and platforms. Substreams derived from a master seed and a
/// round counter are independent of execution order, which is what makes
/// parallel Monte Carlo reductions reproducible.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    /// Substream for round `index` of a run seeded with `master_seed`.
    static RandomStream for_round(std::uint64_t master_seed, std::uint64_t index);

    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform();

    /// Uniform on (0, 1]; safe to pass to log().
    double uniform_pos();

    /// Standard exponential via inversion.
    double exponential();

    /// Standard normal (Box-Muller, one value per call).
    double normal();

    /// Gamma(shape, scale). Integer shapes up to 16 use an exact sum of
    /// exponentials; otherwise Marsaglia-Tsang (requires shape >= 1).
    double gamma(double shape, double scale);

    /// Poisson(mean). Chop-down inversion for small means, PTRS
    /// (transformed rejection) for large ones.
    long poisson(double mean);

    /// Rayleigh with scale sigma.
    double rayleigh(double sigma);

private:
    std::uint64_t s_[4];
};

}  // namespace sagin
