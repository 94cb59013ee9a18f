#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace q2d2::kernels {

/// Which nearest-point implementation to run. Auto picks the widest variant
/// the CPU supports at process start; Scalar forces the reference kernel.
enum class Backend {
    Auto = 0,
    Scalar = 1,
    Avx2 = 2,
};

const char* to_string(Backend backend);

/// True when the AVX2 variant can run on this CPU.
bool avx2_available();

/// Backend that Auto resolves to.
Backend resolved_backend(Backend backend);

/// For each query point (qx[i], qy[i]), writes the index of the grid point
/// (gx[k], gy[k]) with minimum squared Euclidean distance into out_code[i].
/// Ties break toward the lowest grid index. m must be >= 1.
///
/// All variants are required to produce bit-identical results: distances are
/// evaluated as (qx-gx)^2 + (qy-gy)^2 with no FMA contraction, and the update
/// rule is a strict less-than in ascending grid order.
void nearest_point_scalar(const double* qx, const double* qy, std::size_t n,
                          const double* gx, const double* gy, std::size_t m,
                          std::uint32_t* out_code);

#if defined(__x86_64__) || defined(_M_X64)
void nearest_point_avx2(const double* qx, const double* qy, std::size_t n,
                        const double* gx, const double* gy, std::size_t m,
                        std::uint32_t* out_code);
#endif

/// Dispatching entry point used by the batch quantizers.
void nearest_point(const double* qx, const double* qy, std::size_t n,
                   const double* gx, const double* gy, std::size_t m,
                   std::uint32_t* out_code, Backend backend = Backend::Auto);

}  // namespace q2d2::kernels
