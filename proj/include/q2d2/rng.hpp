#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace q2d2 {

/// mt19937_64 with explicit output mappings. The standard pins the engine's
/// bit stream but not the distributions, so uniforms are derived here
/// directly from the raw 64-bit draws to keep every consumer reproducible
/// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unbiased integer in [0, n) via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

/// n_frames x d latent frames, each entry uniform in [-1, 1].
std::vector<double> make_uniform_latents(std::uint64_t seed, std::size_t n_frames, int d);

}  // namespace q2d2
