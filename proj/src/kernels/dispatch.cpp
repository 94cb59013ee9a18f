#include "q2d2/kernels.hpp"

#include <stdexcept>

namespace q2d2::kernels {

const char* to_string(Backend backend) {
    switch (backend) {
        case Backend::Auto: return "auto";
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "?";
}

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend resolved_backend(Backend backend) {
    if (backend == Backend::Auto) {
        return avx2_available() ? Backend::Avx2 : Backend::Scalar;
    }
    return backend;
}

void nearest_point(const double* qx, const double* qy, std::size_t n,
                   const double* gx, const double* gy, std::size_t m,
                   std::uint32_t* out_code, Backend backend) {
    if (m == 0) {
        throw std::invalid_argument("nearest_point: grid must be nonempty");
    }
    switch (resolved_backend(backend)) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2:
            if (!avx2_available()) {
                throw std::runtime_error("nearest_point: AVX2 requested but not supported");
            }
            nearest_point_avx2(qx, qy, n, gx, gy, m, out_code);
            return;
#endif
        default:
            nearest_point_scalar(qx, qy, n, gx, gy, m, out_code);
            return;
    }
}

}  // namespace q2d2::kernels
