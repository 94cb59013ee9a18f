#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "q2d2/grid.hpp"

namespace q2d2 {

/// Finite scalar quantization: each channel independently snaps to l_i
/// uniform levels in [-e_i, e_i], e_i = (l_i - 1)/2. Uses the same
/// bound-then-snap arithmetic as the 2D quantizer, so on rectangle grids the
/// two agree code-for-code and bit-for-bit.
struct FsqConfig {
    std::vector<int> levels;

    static FsqConfig create(std::vector<int> levels);
    int dim() const { return static_cast<int>(levels.size()); }
};

struct FsqResult {
    std::vector<std::uint32_t> codes;  // per-channel level index in [0, l_i)
    std::vector<double> values;        // chosen level values, bounded scale
};

FsqResult fsq_quantize(std::span<const double> z, const FsqConfig& config);

/// Explicit nearest-neighbor codebook. Inference only: no EMA, commitment
/// loss, or reseeding; this exists as the comparison oracle for the implicit
/// grid codebooks.
class VqCodebook {
public:
    static VqCodebook from_entries(std::vector<std::vector<double>> entries);

    /// A 2D codebook whose entries are a pair grid's points, in grid order.
    static VqCodebook from_grid(const PairGrid& grid);

    std::size_t size() const { return count_; }
    int dim() const { return dim_; }
    std::span<const double> entry(std::size_t i) const {
        return {flat_.data() + i * dim_, static_cast<std::size_t>(dim_)};
    }

private:
    VqCodebook(std::vector<double> flat, std::size_t count, int dim)
        : flat_(std::move(flat)), count_(count), dim_(dim) {}

    std::vector<double> flat_;  // count x dim, row-major
    std::size_t count_ = 0;
    int dim_ = 0;
};

struct VqResult {
    std::uint32_t code = 0;
    std::vector<double> vector;
};

/// Nearest entry by Euclidean distance, lowest-index tie-break.
VqResult vq_quantize(std::span<const double> z, const VqCodebook& codebook);

/// Fraction of codebook entries that appear at least once in a code stream.
double vq_utilization(std::span<const std::uint32_t> codes, const VqCodebook& codebook);

}  // namespace q2d2
