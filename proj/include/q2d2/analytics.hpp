#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "q2d2/codebook.hpp"
#include "q2d2/kernels.hpp"
#include "q2d2/quantizer.hpp"

namespace q2d2 {

struct UtilizationReport {
    std::vector<std::uint64_t> per_pair_used;  // distinct pair codes seen
    std::vector<double> per_pair_fraction;     // used / pair size
    double pair_utilization = 0.0;             // min over pairs of per_pair_fraction
    double codebook_utilization = 0.0;         // distinct global codes / |C|
    std::uint64_t frames_seen = 0;
};

/// Exact distinct-code bookkeeping over a token stream. Single writer;
/// accumulators merge associatively and commutatively so streams can be
/// measured in parallel chunks.
class UtilizationAccumulator {
public:
    explicit UtilizationAccumulator(CodebookLayout layout);

    /// One frame of P pair codes. Out-of-range codes are an invalid-stream error.
    void add_frame(std::span<const std::uint32_t> pair_codes);

    /// n_frames frames packed frame-major (n x P).
    void add_stream(std::span<const std::uint32_t> codes, std::size_t n_frames);

    void merge(const UtilizationAccumulator& other);

    UtilizationReport report() const;

private:
    CodebookLayout layout_;
    std::vector<std::vector<bool>> pair_seen_;
    std::vector<std::uint64_t> pair_used_;
    std::unordered_set<std::uint64_t> global_seen_;
    std::uint64_t frames_ = 0;
};

UtilizationReport measure_utilization(std::span<const std::uint32_t> codes,
                                      std::size_t n_frames, const CodebookLayout& layout);

struct MseReport {
    std::vector<double> per_pair;  // mean ||pair error||^2
    double total = 0.0;            // mean summed over pairs
    std::uint64_t frames = 0;
};

/// Sum-of-squares accumulator with count-weighted merge.
class MseAccumulator {
public:
    explicit MseAccumulator(std::size_t pairs);
    void add_frame(std::span<const double> pair_sq_errors);
    void merge(const MseAccumulator& other);
    MseReport report() const;

private:
    std::vector<double> sum_sq_;
    std::uint64_t frames_ = 0;
};

/// Mean squared quantization error in bounded space, per pair and total,
/// over n_frames latent frames (n x d, row-major).
MseReport quantization_mse(std::span<const double> frames, std::size_t n_frames,
                           const QuantizerConfig& config,
                           kernels::Backend backend = kernels::Backend::Auto);

/// Same, measured in latent ([-1,1]) space after unbounding the chosen grid
/// points. Comparable across configs with different level counts.
MseReport quantization_mse_latent(std::span<const double> frames, std::size_t n_frames,
                                  const QuantizerConfig& config,
                                  kernels::Backend backend = kernels::Backend::Auto);

struct Region {
    double xmin = 0.0, xmax = 0.0;
    double ymin = 0.0, ymax = 0.0;
    double area() const { return (xmax - xmin) * (ymax - ymin); }
};

/// Axis-aligned bounding box of the grid's covered area: coordinate extrema
/// padded by half a spacing per axis.
Region covered_bounding_box(const PairGrid& grid);

struct PackingResult {
    double normalized_second_moment = 0.0;  // mse * points / area; lower is denser
    double mse = 0.0;                       // raw mean squared 2D error
    std::size_t samples = 0;
};

/// Monte-Carlo normalized second moment of a grid over a region. samples must
/// be >= 10^4; a degenerate region is a domain error.
PackingResult packing_efficiency(const PairGrid& grid, const Region& region,
                                 std::size_t samples, std::uint64_t seed,
                                 kernels::Backend backend = kernels::Backend::Auto);

PackingResult packing_efficiency(const PairGrid& grid, std::size_t samples, std::uint64_t seed,
                                 kernels::Backend backend = kernels::Backend::Auto);

struct MiEstimate {
    double mi_bits = 0.0;
    double bias_bound_bits = 0.0;  // plug-in bias bound (bins-1)^2 / (2 N ln 2)
};

/// Plug-in mutual information (bits) from an equal-width 2D histogram over a
/// known bounded domain. Requires >= 1000 samples and >= 4 bins.
MiEstimate mi_histogram(std::span<const double> xs, std::span<const double> ys, int bins,
                        const Region& domain);

/// Exact plug-in mutual information (bits) between two integer label streams.
/// Nonnegative by construction; exactly 0.0 when the joint counts factorize.
double mi_discrete_bits(std::span<const std::uint32_t> labels_x,
                        std::span<const std::uint32_t> labels_y);

/// Maps each grid code to the identity of its x and y coordinate values, so
/// post-quantization MI can be computed between the two axes of a pair.
struct AxisLabels {
    std::vector<std::uint32_t> x_of_code;
    std::vector<std::uint32_t> y_of_code;
    std::size_t distinct_x = 0;
    std::size_t distinct_y = 0;
};

AxisLabels axis_labels(const PairGrid& grid);

struct MiReport {
    std::vector<double> per_pair_mi_pre_bits;   // histogram estimate, bounded coordinates
    std::vector<double> per_pair_mi_post_bits;  // exact discrete, grid-point identities
    int histogram_bins = 0;
    double pre_bias_bound_bits = 0.0;
    std::uint64_t frames = 0;
};

/// Pre- and post-quantization per-pair MI over a latent stream (n x d).
MiReport measure_mi(std::span<const double> frames, std::size_t n_frames,
                    const QuantizerConfig& config, int bins,
                    kernels::Backend backend = kernels::Backend::Auto);

}  // namespace q2d2
