#include "q2d2/rng.hpp"

namespace q2d2 {

std::vector<double> make_uniform_latents(std::uint64_t seed, std::size_t n_frames, int d) {
    Rng rng(seed);
    std::vector<double> frames(n_frames * static_cast<std::size_t>(d));
    for (double& v : frames) {
        v = rng.uniform(-1.0, 1.0);
    }
    return frames;
}

}  // namespace q2d2
