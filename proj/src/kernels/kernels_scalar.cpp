#include "q2d2/kernels.hpp"

#include <limits>

namespace q2d2::kernels {

void nearest_point_scalar(const double* qx, const double* qy, std::size_t n,
                          const double* gx, const double* gy, std::size_t m,
                          std::uint32_t* out_code) {
    for (std::size_t i = 0; i < n; ++i) {
        const double px = qx[i];
        const double py = qy[i];
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_code = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const double dx = px - gx[k];
            const double dy = py - gy[k];
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) {
                best = d2;
                best_code = static_cast<std::uint32_t>(k);
            }
        }
        out_code[i] = best_code;
    }
}

}  // namespace q2d2::kernels
