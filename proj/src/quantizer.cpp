#include "q2d2/quantizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace q2d2 {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_dim(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw std::invalid_argument(std::string(what) + ": expected length " +
                                    std::to_string(want) + ", got " + std::to_string(got));
    }
}

}  // namespace

QuantizerConfig QuantizerConfig::create(std::vector<int> levels,
                                        std::vector<TilingKind> tilings) {
    if (levels.empty() || levels.size() % 2 != 0) {
        throw std::invalid_argument("quantizer config: dimension must be even and >= 2, got " +
                                    std::to_string(levels.size()));
    }
    const std::size_t pairs = levels.size() / 2;
    if (tilings.size() != pairs) {
        throw std::invalid_argument("quantizer config: need one tiling per pair (" +
                                    std::to_string(pairs) + "), got " +
                                    std::to_string(tilings.size()));
    }

    QuantizerConfig config;
    config.levels_ = std::move(levels);
    config.tilings_ = std::move(tilings);
    config.grids_.reserve(pairs);
    for (std::size_t j = 0; j < pairs; ++j) {
        const int lx = config.levels_[2 * j];
        const int ly = config.levels_[2 * j + 1];
        if (config.tilings_[j] == TilingKind::Hexagon && lx != ly) {
            throw std::invalid_argument("quantizer config: hexagon pair " + std::to_string(j) +
                                        " requires equal level counts, got " +
                                        std::to_string(lx) + " and " + std::to_string(ly));
        }
        config.grids_.push_back(build_grid(PairGridSpec::from_levels(config.tilings_[j], lx, ly)));
    }
    return config;
}

QuantizerConfig QuantizerConfig::create_uniform(std::vector<int> levels, TilingKind kind) {
    std::vector<TilingKind> tilings(levels.size() / 2, kind);
    return create(std::move(levels), std::move(tilings));
}

std::vector<double> bound(std::span<const double> z, const QuantizerConfig& config) {
    check_dim(z.size(), static_cast<std::size_t>(config.dim()), "bound: latent vector");
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!(std::fabs(z[i]) <= 1.0 + kDomainSlack)) {
            throw std::domain_error("bound: latent entry " + std::to_string(i) + " = " +
                                    std::to_string(z[i]) + " outside [-1, 1]");
        }
        out[i] = z[i] * config.bound_scale(static_cast<int>(i));
    }
    return out;
}

std::vector<double> unbound(const QuantizedVector& q, const QuantizerConfig& config) {
    check_dim(q.values.size(), static_cast<std::size_t>(config.dim()), "unbound: quantized vector");
    std::vector<double> out(q.values.size());
    for (std::size_t i = 0; i < q.values.size(); ++i) {
        out[i] = (q.values[i] * 2.0) / static_cast<double>(config.levels()[i]);
    }
    return out;
}

std::vector<GridPoint> split_pairs(std::span<const double> bounded) {
    if (bounded.size() % 2 != 0) {
        throw std::invalid_argument("split_pairs: vector length must be even, got " +
                                    std::to_string(bounded.size()));
    }
    std::vector<GridPoint> pairs(bounded.size() / 2);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        pairs[j] = {bounded[2 * j], bounded[2 * j + 1]};
    }
    return pairs;
}

std::pair<std::uint32_t, GridPoint> quantize_pair(GridPoint p, const PairGrid& grid) {
    std::uint32_t code = 0;
    kernels::nearest_point_scalar(&p.x, &p.y, 1, grid.xs().data(), grid.ys().data(),
                                  grid.size(), &code);
    return {code, grid.point(code)};
}

QuantizedVector quantize(std::span<const double> z, const QuantizerConfig& config) {
    const std::vector<double> zb = bound(z, config);
    QuantizedVector out;
    out.values.resize(zb.size());
    out.pair_codes.resize(config.pairs());
    for (std::size_t j = 0; j < config.pairs(); ++j) {
        const auto [code, point] = quantize_pair({zb[2 * j], zb[2 * j + 1]}, config.grid(j));
        out.pair_codes[j] = code;
        out.values[2 * j] = point.x;
        out.values[2 * j + 1] = point.y;
    }
    return out;
}

QuantizedVector dequantize(std::span<const std::uint32_t> codes, const QuantizerConfig& config) {
    check_dim(codes.size(), config.pairs(), "dequantize: code vector");
    QuantizedVector out;
    out.values.resize(2 * codes.size());
    out.pair_codes.assign(codes.begin(), codes.end());
    for (std::size_t j = 0; j < codes.size(); ++j) {
        const PairGrid& grid = config.grid(j);
        if (codes[j] >= grid.size()) {
            throw std::out_of_range("dequantize: pair " + std::to_string(j) + " code " +
                                    std::to_string(codes[j]) + " out of range [0, " +
                                    std::to_string(grid.size()) + ")");
        }
        const GridPoint& point = grid.point(codes[j]);
        out.values[2 * j] = point.x;
        out.values[2 * j + 1] = point.y;
    }
    return out;
}

SteResult ste_forward_backward(std::span<const double> z, const QuantizerConfig& config,
                               std::span<const double> upstream_grad) {
    check_dim(upstream_grad.size(), static_cast<std::size_t>(config.dim()),
              "ste_forward_backward: upstream gradient");
    SteResult result;
    result.quantized = quantize(z, config);
    result.downstream_grad.resize(upstream_grad.size());
    for (std::size_t i = 0; i < upstream_grad.size(); ++i) {
        result.downstream_grad[i] = upstream_grad[i] * config.bound_scale(static_cast<int>(i));
    }
    return result;
}

void quantize_stream(std::span<const double> frames, std::size_t n_frames,
                     const QuantizerConfig& config, std::vector<std::uint32_t>& out_codes,
                     kernels::Backend backend) {
    const std::size_t d = static_cast<std::size_t>(config.dim());
    if (frames.size() != n_frames * d) {
        throw std::invalid_argument("quantize_stream: frame buffer size " +
                                    std::to_string(frames.size()) + " != n_frames * d");
    }
    const std::size_t pairs = config.pairs();
    out_codes.resize(n_frames * pairs);

    std::vector<double> qx(n_frames), qy(n_frames);
    std::vector<std::uint32_t> codes(n_frames);
    for (std::size_t j = 0; j < pairs; ++j) {
        const double sx = config.bound_scale(static_cast<int>(2 * j));
        const double sy = config.bound_scale(static_cast<int>(2 * j + 1));
        for (std::size_t i = 0; i < n_frames; ++i) {
            const double zx = frames[i * d + 2 * j];
            const double zy = frames[i * d + 2 * j + 1];
            if (!(std::fabs(zx) <= 1.0 + kDomainSlack) || !(std::fabs(zy) <= 1.0 + kDomainSlack)) {
                throw std::domain_error("quantize_stream: frame " + std::to_string(i) +
                                        " has an entry outside [-1, 1]");
            }
            qx[i] = zx * sx;
            qy[i] = zy * sy;
        }
        const PairGrid& grid = config.grid(j);
        kernels::nearest_point(qx.data(), qy.data(), n_frames, grid.xs().data(),
                               grid.ys().data(), grid.size(), codes.data(), backend);
        for (std::size_t i = 0; i < n_frames; ++i) {
            out_codes[i * pairs + j] = codes[i];
        }
    }
}

}  // namespace q2d2
