#include "q2d2/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "q2d2/rng.hpp"

namespace q2d2 {

UtilizationAccumulator::UtilizationAccumulator(CodebookLayout layout)
    : layout_(std::move(layout)) {
    pair_seen_.reserve(layout_.pairs());
    for (std::uint64_t size : layout_.pair_sizes) {
        pair_seen_.emplace_back(size, false);
    }
    pair_used_.assign(layout_.pairs(), 0);
}

void UtilizationAccumulator::add_frame(std::span<const std::uint32_t> pair_codes) {
    if (pair_codes.size() != layout_.pairs()) {
        throw std::invalid_argument("utilization: frame has " + std::to_string(pair_codes.size()) +
                                    " pair codes, layout expects " +
                                    std::to_string(layout_.pairs()));
    }
    for (std::size_t j = 0; j < pair_codes.size(); ++j) {
        const std::uint32_t code = pair_codes[j];
        if (code >= layout_.pair_sizes[j]) {
            throw std::out_of_range("utilization: invalid stream, pair " + std::to_string(j) +
                                    " code " + std::to_string(code) + " out of range");
        }
        if (!pair_seen_[j][code]) {
            pair_seen_[j][code] = true;
            ++pair_used_[j];
        }
    }
    global_seen_.insert(encode_global(pair_codes, layout_));
    ++frames_;
}

void UtilizationAccumulator::add_stream(std::span<const std::uint32_t> codes,
                                        std::size_t n_frames) {
    const std::size_t pairs = layout_.pairs();
    if (codes.size() != n_frames * pairs) {
        throw std::invalid_argument("utilization: stream size mismatch");
    }
    for (std::size_t i = 0; i < n_frames; ++i) {
        add_frame(codes.subspan(i * pairs, pairs));
    }
}

void UtilizationAccumulator::merge(const UtilizationAccumulator& other) {
    if (other.layout_.pair_sizes != layout_.pair_sizes) {
        throw std::invalid_argument("utilization: cannot merge accumulators over different layouts");
    }
    for (std::size_t j = 0; j < pair_seen_.size(); ++j) {
        for (std::size_t c = 0; c < pair_seen_[j].size(); ++c) {
            if (other.pair_seen_[j][c] && !pair_seen_[j][c]) {
                pair_seen_[j][c] = true;
                ++pair_used_[j];
            }
        }
    }
    global_seen_.insert(other.global_seen_.begin(), other.global_seen_.end());
    frames_ += other.frames_;
}

UtilizationReport UtilizationAccumulator::report() const {
    UtilizationReport rep;
    rep.per_pair_used = pair_used_;
    rep.per_pair_fraction.resize(layout_.pairs());
    rep.pair_utilization = layout_.pairs() == 0 ? 0.0 : 1.0;
    for (std::size_t j = 0; j < layout_.pairs(); ++j) {
        rep.per_pair_fraction[j] =
            static_cast<double>(pair_used_[j]) / static_cast<double>(layout_.pair_sizes[j]);
        rep.pair_utilization = std::min(rep.pair_utilization, rep.per_pair_fraction[j]);
    }
    if (frames_ == 0) {
        rep.pair_utilization = 0.0;
    }
    rep.codebook_utilization =
        static_cast<double>(global_seen_.size()) / static_cast<double>(layout_.total_size);
    rep.frames_seen = frames_;
    return rep;
}

UtilizationReport measure_utilization(std::span<const std::uint32_t> codes,
                                      std::size_t n_frames, const CodebookLayout& layout) {
    UtilizationAccumulator acc(layout);
    acc.add_stream(codes, n_frames);
    return acc.report();
}

MseAccumulator::MseAccumulator(std::size_t pairs) : sum_sq_(pairs, 0.0) {}

void MseAccumulator::add_frame(std::span<const double> pair_sq_errors) {
    if (pair_sq_errors.size() != sum_sq_.size()) {
        throw std::invalid_argument("mse: pair count mismatch");
    }
    for (std::size_t j = 0; j < sum_sq_.size(); ++j) {
        sum_sq_[j] += pair_sq_errors[j];
    }
    ++frames_;
}

void MseAccumulator::merge(const MseAccumulator& other) {
    if (other.sum_sq_.size() != sum_sq_.size()) {
        throw std::invalid_argument("mse: cannot merge accumulators with different pair counts");
    }
    for (std::size_t j = 0; j < sum_sq_.size(); ++j) {
        sum_sq_[j] += other.sum_sq_[j];
    }
    frames_ += other.frames_;
}

MseReport MseAccumulator::report() const {
    MseReport rep;
    rep.per_pair.resize(sum_sq_.size(), 0.0);
    rep.frames = frames_;
    if (frames_ == 0) {
        return rep;
    }
    for (std::size_t j = 0; j < sum_sq_.size(); ++j) {
        rep.per_pair[j] = sum_sq_[j] / static_cast<double>(frames_);
        rep.total += rep.per_pair[j];
    }
    return rep;
}

namespace {

MseReport stream_mse(std::span<const double> frames, std::size_t n_frames,
                     const QuantizerConfig& config, kernels::Backend backend,
                     bool latent_space) {
    const std::size_t d = static_cast<std::size_t>(config.dim());
    const std::size_t pairs = config.pairs();
    std::vector<std::uint32_t> codes;
    quantize_stream(frames, n_frames, config, codes, backend);

    MseAccumulator acc(pairs);
    std::vector<double> sq(pairs);
    for (std::size_t i = 0; i < n_frames; ++i) {
        for (std::size_t j = 0; j < pairs; ++j) {
            const GridPoint& g = config.grid(j).point(codes[i * pairs + j]);
            const double sx = config.bound_scale(static_cast<int>(2 * j));
            const double sy = config.bound_scale(static_cast<int>(2 * j + 1));
            double ex, ey;
            if (latent_space) {
                ex = frames[i * d + 2 * j] - (g.x * 2.0) / static_cast<double>(config.levels()[2 * j]);
                ey = frames[i * d + 2 * j + 1] -
                     (g.y * 2.0) / static_cast<double>(config.levels()[2 * j + 1]);
            } else {
                ex = frames[i * d + 2 * j] * sx - g.x;
                ey = frames[i * d + 2 * j + 1] * sy - g.y;
            }
            sq[j] = ex * ex + ey * ey;
        }
        acc.add_frame(sq);
    }
    return acc.report();
}

}  // namespace

MseReport quantization_mse(std::span<const double> frames, std::size_t n_frames,
                           const QuantizerConfig& config, kernels::Backend backend) {
    return stream_mse(frames, n_frames, config, backend, false);
}

MseReport quantization_mse_latent(std::span<const double> frames, std::size_t n_frames,
                                  const QuantizerConfig& config, kernels::Backend backend) {
    return stream_mse(frames, n_frames, config, backend, true);
}

Region covered_bounding_box(const PairGrid& grid) {
    double xmin = grid.points().front().x, xmax = xmin;
    double ymin = grid.points().front().y, ymax = ymin;
    for (const GridPoint& p : grid.points()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double hx = grid.dx() / 2.0;
    const double hy = grid.dy() / 2.0;
    return Region{xmin - hx, xmax + hx, ymin - hy, ymax + hy};
}

PackingResult packing_efficiency(const PairGrid& grid, const Region& region,
                                 std::size_t samples, std::uint64_t seed,
                                 kernels::Backend backend) {
    if (samples < 10000) {
        throw std::invalid_argument("packing_efficiency: need at least 10^4 samples");
    }
    if (!(region.xmax > region.xmin) || !(region.ymax > region.ymin)) {
        throw std::domain_error("packing_efficiency: degenerate region");
    }

    constexpr std::size_t kChunk = 1 << 14;
    Rng rng(seed);
    std::vector<double> qx(kChunk), qy(kChunk);
    std::vector<std::uint32_t> codes(kChunk);

    double sum_sq = 0.0;
    std::size_t done = 0;
    while (done < samples) {
        const std::size_t n = std::min(kChunk, samples - done);
        for (std::size_t i = 0; i < n; ++i) {
            qx[i] = rng.uniform(region.xmin, region.xmax);
            qy[i] = rng.uniform(region.ymin, region.ymax);
        }
        kernels::nearest_point(qx.data(), qy.data(), n, grid.xs().data(), grid.ys().data(),
                               grid.size(), codes.data(), backend);
        for (std::size_t i = 0; i < n; ++i) {
            const GridPoint& g = grid.point(codes[i]);
            const double ex = qx[i] - g.x;
            const double ey = qy[i] - g.y;
            sum_sq += ex * ex + ey * ey;
        }
        done += n;
    }

    PackingResult result;
    result.samples = samples;
    result.mse = sum_sq / static_cast<double>(samples);
    result.normalized_second_moment =
        result.mse * static_cast<double>(grid.size()) / region.area();
    return result;
}

PackingResult packing_efficiency(const PairGrid& grid, std::size_t samples, std::uint64_t seed,
                                 kernels::Backend backend) {
    return packing_efficiency(grid, covered_bounding_box(grid), samples, seed, backend);
}

MiEstimate mi_histogram(std::span<const double> xs, std::span<const double> ys, int bins,
                        const Region& domain) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("mi_histogram: coordinate streams differ in length");
    }
    if (xs.size() < 1000) {
        throw std::invalid_argument("mi_histogram: need at least 1000 samples, got " +
                                    std::to_string(xs.size()));
    }
    if (bins < 4) {
        throw std::invalid_argument("mi_histogram: need at least 4 bins, got " +
                                    std::to_string(bins));
    }
    if (!(domain.xmax > domain.xmin) || !(domain.ymax > domain.ymin)) {
        throw std::domain_error("mi_histogram: degenerate domain");
    }

    const std::size_t b = static_cast<std::size_t>(bins);
    const double wx = (domain.xmax - domain.xmin) / static_cast<double>(bins);
    const double wy = (domain.ymax - domain.ymin) / static_cast<double>(bins);

    std::vector<std::uint64_t> joint(b * b, 0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto bin = [&](double v, double lo, double w) {
            int k = static_cast<int>(std::floor((v - lo) / w));
            return static_cast<std::size_t>(std::clamp(k, 0, bins - 1));
        };
        joint[bin(xs[i], domain.xmin, wx) * b + bin(ys[i], domain.ymin, wy)] += 1;
    }

    std::vector<std::uint64_t> row(b, 0), col(b, 0);
    for (std::size_t r = 0; r < b; ++r) {
        for (std::size_t c = 0; c < b; ++c) {
            row[r] += joint[r * b + c];
            col[c] += joint[r * b + c];
        }
    }

    const double n = static_cast<double>(xs.size());
    double mi = 0.0;
    for (std::size_t r = 0; r < b; ++r) {
        for (std::size_t c = 0; c < b; ++c) {
            const std::uint64_t cnt = joint[r * b + c];
            if (cnt == 0) continue;
            const double ratio = (static_cast<double>(cnt) * n) /
                                 (static_cast<double>(row[r]) * static_cast<double>(col[c]));
            mi += (static_cast<double>(cnt) / n) * std::log2(ratio);
        }
    }

    MiEstimate est;
    est.mi_bits = mi;
    est.bias_bound_bits = (static_cast<double>(bins - 1) * (bins - 1)) / (2.0 * n * std::log(2.0));
    return est;
}

double mi_discrete_bits(std::span<const std::uint32_t> labels_x,
                        std::span<const std::uint32_t> labels_y) {
    if (labels_x.size() != labels_y.size() || labels_x.empty()) {
        throw std::invalid_argument("mi_discrete: label streams must be nonempty and equal length");
    }
    std::uint32_t max_x = 0, max_y = 0;
    for (std::size_t i = 0; i < labels_x.size(); ++i) {
        max_x = std::max(max_x, labels_x[i]);
        max_y = std::max(max_y, labels_y[i]);
    }
    const std::size_t nx = static_cast<std::size_t>(max_x) + 1;
    const std::size_t ny = static_cast<std::size_t>(max_y) + 1;

    std::vector<std::uint64_t> joint(nx * ny, 0);
    std::vector<std::uint64_t> row(nx, 0), col(ny, 0);
    for (std::size_t i = 0; i < labels_x.size(); ++i) {
        joint[labels_x[i] * ny + labels_y[i]] += 1;
        row[labels_x[i]] += 1;
        col[labels_y[i]] += 1;
    }

    // Integer products keep the factorized case exact: when c_xy * N equals
    // c_x * c_y the log term is log2(1.0) == 0.0 with no rounding residue.
    const std::uint64_t n = labels_x.size();
    double mi = 0.0;
    for (std::size_t r = 0; r < nx; ++r) {
        if (row[r] == 0) continue;
        for (std::size_t c = 0; c < ny; ++c) {
            const std::uint64_t cnt = joint[r * ny + c];
            if (cnt == 0) continue;
            const double num = static_cast<double>(cnt) * static_cast<double>(n);
            const double den = static_cast<double>(row[r]) * static_cast<double>(col[c]);
            mi += (static_cast<double>(cnt) / static_cast<double>(n)) * std::log2(num / den);
        }
    }
    return mi;
}

AxisLabels axis_labels(const PairGrid& grid) {
    std::map<double, std::uint32_t> xs, ys;
    for (const GridPoint& p : grid.points()) {
        xs.emplace(p.x, 0);
        ys.emplace(p.y, 0);
    }
    std::uint32_t next = 0;
    for (auto& [coordinate, label] : xs) label = next++;
    next = 0;
    for (auto& [coordinate, label] : ys) label = next++;

    AxisLabels out;
    out.distinct_x = xs.size();
    out.distinct_y = ys.size();
    out.x_of_code.reserve(grid.size());
    out.y_of_code.reserve(grid.size());
    for (const GridPoint& p : grid.points()) {
        out.x_of_code.push_back(xs.at(p.x));
        out.y_of_code.push_back(ys.at(p.y));
    }
    return out;
}

MiReport measure_mi(std::span<const double> frames, std::size_t n_frames,
                    const QuantizerConfig& config, int bins, kernels::Backend backend) {
    const std::size_t d = static_cast<std::size_t>(config.dim());
    const std::size_t pairs = config.pairs();

    std::vector<std::uint32_t> codes;
    quantize_stream(frames, n_frames, config, codes, backend);

    MiReport rep;
    rep.histogram_bins = bins;
    rep.frames = n_frames;
    rep.per_pair_mi_pre_bits.resize(pairs);
    rep.per_pair_mi_post_bits.resize(pairs);

    std::vector<double> bx(n_frames), by(n_frames);
    std::vector<std::uint32_t> lx(n_frames), ly(n_frames);
    for (std::size_t j = 0; j < pairs; ++j) {
        const double sx = config.bound_scale(static_cast<int>(2 * j));
        const double sy = config.bound_scale(static_cast<int>(2 * j + 1));
        for (std::size_t i = 0; i < n_frames; ++i) {
            bx[i] = frames[i * d + 2 * j] * sx;
            by[i] = frames[i * d + 2 * j + 1] * sy;
        }
        const Region domain{-sx, sx, -sy, sy};
        const MiEstimate pre = mi_histogram(bx, by, bins, domain);
        rep.per_pair_mi_pre_bits[j] = pre.mi_bits;
        rep.pre_bias_bound_bits = pre.bias_bound_bits;

        const AxisLabels labels = axis_labels(config.grid(j));
        for (std::size_t i = 0; i < n_frames; ++i) {
            const std::uint32_t code = codes[i * pairs + j];
            lx[i] = labels.x_of_code[code];
            ly[i] = labels.y_of_code[code];
        }
        rep.per_pair_mi_post_bits[j] = mi_discrete_bits(lx, ly);
    }
    return rep;
}

}  // namespace q2d2
