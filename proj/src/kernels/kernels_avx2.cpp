#include "q2d2/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <limits>

namespace q2d2::kernels {

// Four query points per iteration, scanning the grid in ascending order.
// _CMP_LT_OQ plus blend reproduces the scalar "strict less keeps the earliest
// index" tie-break exactly, and no FMA is used so the squared distances round
// identically to the scalar kernel.
void nearest_point_avx2(const double* qx, const double* qy, std::size_t n,
                        const double* gx, const double* gy, std::size_t m,
                        std::uint32_t* out_code) {
    const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d px = _mm256_loadu_pd(qx + i);
        const __m256d py = _mm256_loadu_pd(qy + i);

        __m256d best = inf;
        __m256i best_code = _mm256_setzero_si256();

        for (std::size_t k = 0; k < m; ++k) {
            const __m256d dx = _mm256_sub_pd(px, _mm256_set1_pd(gx[k]));
            const __m256d dy = _mm256_sub_pd(py, _mm256_set1_pd(gy[k]));
            const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));

            const __m256d lt = _mm256_cmp_pd(d2, best, _CMP_LT_OQ);
            best = _mm256_blendv_pd(best, d2, lt);

            const __m256i code = _mm256_set1_epi64x(static_cast<long long>(k));
            best_code = _mm256_castpd_si256(_mm256_blendv_pd(
                _mm256_castsi256_pd(best_code), _mm256_castsi256_pd(code), lt));
        }

        alignas(32) long long codes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(codes), best_code);
        out_code[i + 0] = static_cast<std::uint32_t>(codes[0]);
        out_code[i + 1] = static_cast<std::uint32_t>(codes[1]);
        out_code[i + 2] = static_cast<std::uint32_t>(codes[2]);
        out_code[i + 3] = static_cast<std::uint32_t>(codes[3]);
    }

    if (i < n) {
        nearest_point_scalar(qx + i, qy + i, n - i, gx, gy, m, out_code + i);
    }
}

}  // namespace q2d2::kernels

#endif  // x86_64
