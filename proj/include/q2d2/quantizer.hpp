#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "q2d2/grid.hpp"
#include "q2d2/kernels.hpp"

namespace q2d2 {

/// Full quantizer description: latent dimension d (even), one level count per
/// dimension, and one tiling per pair of adjacent dimensions.
///
/// Indexing is 0-based throughout: pair j covers dimensions (2j, 2j+1), with
/// 2j the x axis and 2j+1 the y axis of grid j.
class QuantizerConfig {
public:
    static QuantizerConfig create(std::vector<int> levels, std::vector<TilingKind> tilings);

    /// All pairs share one tiling kind.
    static QuantizerConfig create_uniform(std::vector<int> levels, TilingKind kind);

    int dim() const { return static_cast<int>(levels_.size()); }
    std::size_t pairs() const { return grids_.size(); }
    std::span<const int> levels() const { return levels_; }
    std::span<const TilingKind> tilings() const { return tilings_; }
    const PairGrid& grid(std::size_t j) const { return grids_[j]; }

    /// Scale applied to dimension i by the bounding step, levels[i] / 2.
    double bound_scale(int i) const { return static_cast<double>(levels_[i]) / 2.0; }

private:
    QuantizerConfig() = default;
    std::vector<int> levels_;
    std::vector<TilingKind> tilings_;
    std::vector<PairGrid> grids_;
};

/// A quantized frame: the chosen grid-point coordinates (in bounded space,
/// concatenated pair by pair) and the per-pair point indices. values is
/// always exactly reconstructible from pair_codes via dequantize.
struct QuantizedVector {
    std::vector<double> values;
    std::vector<std::uint32_t> pair_codes;
};

/// Rescales z in [-1,1]^d onto the grid extents: out[i] = z[i] * levels[i]/2.
/// Out-of-range input is a domain error, not a clamp; upstream projections
/// are expected to guarantee the domain.
std::vector<double> bound(std::span<const double> z, const QuantizerConfig& config);

/// Inverse scaling of bound: out[i] = q.values[i] * 2 / levels[i]. Hexagon
/// row offsets and rhombic midpoints may land slightly outside the nominal
/// grid box, but never outside [-1, 1] for level-derived spreads.
std::vector<double> unbound(const QuantizedVector& q, const QuantizerConfig& config);

/// Reshapes a bounded vector into its adjacent coordinate pairs. Throws on
/// odd length.
std::vector<GridPoint> split_pairs(std::span<const double> bounded);

/// Index and coordinates of the grid point nearest to p in Euclidean
/// distance. Equidistant candidates resolve to the lowest canonical index.
std::pair<std::uint32_t, GridPoint> quantize_pair(GridPoint p, const PairGrid& grid);

/// bound -> pair -> nearest grid point, per pair.
QuantizedVector quantize(std::span<const double> z, const QuantizerConfig& config);

/// Reconstructs grid-point coordinates from pair codes, bit-exactly.
QuantizedVector dequantize(std::span<const std::uint32_t> codes, const QuantizerConfig& config);

struct SteResult {
    QuantizedVector quantized;
    std::vector<double> downstream_grad;
};

/// Forward pass of quantize plus the straight-through backward rule: the
/// snap-to-grid step has identity Jacobian, the bounding scale is
/// differentiated normally, so downstream_grad[i] = upstream_grad[i] * levels[i]/2.
SteResult ste_forward_backward(std::span<const double> z, const QuantizerConfig& config,
                               std::span<const double> upstream_grad);

/// Batch quantization of n frames packed row-major (n x d). Writes n x P pair
/// codes, frame-major. This is the data-parallel path behind the CLI and the
/// analytics accumulators; backend selects the nearest-point kernel.
void quantize_stream(std::span<const double> frames, std::size_t n_frames,
                     const QuantizerConfig& config, std::vector<std::uint32_t>& out_codes,
                     kernels::Backend backend = kernels::Backend::Auto);

}  // namespace q2d2
