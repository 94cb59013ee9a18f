#include "q2d2/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace q2d2 {

FsqConfig FsqConfig::create(std::vector<int> levels) {
    if (levels.empty()) {
        throw std::invalid_argument("fsq config: need at least one channel");
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 2 || levels[i] > 255) {
            throw std::invalid_argument("fsq config: channel " + std::to_string(i) +
                                        " level count must be in [2, 255]");
        }
    }
    return FsqConfig{std::move(levels)};
}

FsqResult fsq_quantize(std::span<const double> z, const FsqConfig& config) {
    if (z.size() != static_cast<std::size_t>(config.dim())) {
        throw std::invalid_argument("fsq_quantize: expected " + std::to_string(config.dim()) +
                                    " channels, got " + std::to_string(z.size()));
    }
    FsqResult result;
    result.codes.resize(z.size());
    result.values.resize(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!(std::fabs(z[i]) <= 1.0 + 1e-12)) {
            throw std::domain_error("fsq_quantize: channel " + std::to_string(i) +
                                    " outside [-1, 1]");
        }
        const int l = config.levels[i];
        const double e = spread_from_levels(l);
        const double dx = 2.0 * e / static_cast<double>(l - 1);
        const double v = z[i] * (static_cast<double>(l) / 2.0);

        // Same level arithmetic and tie-break as the grid builder and the
        // nearest-point kernel: level k at k*dx - e, strict less keeps the
        // lowest index.
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_code = 0;
        double best_value = 0.0;
        for (int k = 0; k < l; ++k) {
            const double level = static_cast<double>(k) * dx - e;
            const double diff = v - level;
            const double d2 = diff * diff;
            if (d2 < best) {
                best = d2;
                best_code = static_cast<std::uint32_t>(k);
                best_value = level;
            }
        }
        result.codes[i] = best_code;
        result.values[i] = best_value;
    }
    return result;
}

VqCodebook VqCodebook::from_entries(std::vector<std::vector<double>> entries) {
    if (entries.empty()) {
        throw std::invalid_argument("vq codebook: must be nonempty");
    }
    const int dim = static_cast<int>(entries.front().size());
    if (dim == 0) {
        throw std::invalid_argument("vq codebook: entries must have dimension >= 1");
    }
    std::vector<double> flat;
    flat.reserve(entries.size() * dim);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (static_cast<int>(entries[i].size()) != dim) {
            throw std::invalid_argument("vq codebook: entry " + std::to_string(i) +
                                        " has mismatched dimension");
        }
        flat.insert(flat.end(), entries[i].begin(), entries[i].end());
    }
    return VqCodebook(std::move(flat), entries.size(), dim);
}

VqCodebook VqCodebook::from_grid(const PairGrid& grid) {
    std::vector<double> flat;
    flat.reserve(grid.size() * 2);
    for (const GridPoint& p : grid.points()) {
        flat.push_back(p.x);
        flat.push_back(p.y);
    }
    return VqCodebook(std::move(flat), grid.size(), 2);
}

VqResult vq_quantize(std::span<const double> z, const VqCodebook& codebook) {
    if (z.size() != static_cast<std::size_t>(codebook.dim())) {
        throw std::invalid_argument("vq_quantize: query dimension " + std::to_string(z.size()) +
                                    " != codebook dimension " + std::to_string(codebook.dim()));
    }
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_code = 0;
    for (std::size_t i = 0; i < codebook.size(); ++i) {
        const auto entry = codebook.entry(i);
        double d2 = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            const double diff = z[k] - entry[k];
            d2 += diff * diff;
        }
        if (d2 < best) {
            best = d2;
            best_code = static_cast<std::uint32_t>(i);
        }
    }
    const auto entry = codebook.entry(best_code);
    return VqResult{best_code, std::vector<double>(entry.begin(), entry.end())};
}

double vq_utilization(std::span<const std::uint32_t> codes, const VqCodebook& codebook) {
    std::vector<bool> seen(codebook.size(), false);
    std::size_t distinct = 0;
    for (std::uint32_t code : codes) {
        if (code >= codebook.size()) {
            throw std::out_of_range("vq_utilization: code " + std::to_string(code) +
                                    " out of range");
        }
        if (!seen[code]) {
            seen[code] = true;
            ++distinct;
        }
    }
    return static_cast<double>(distinct) / static_cast<double>(codebook.size());
}

}  // namespace q2d2
