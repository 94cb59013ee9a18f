#include "q2d2/codebook.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace q2d2 {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 wide = static_cast<unsigned __int128>(a) * b;
    if (wide > UINT64_MAX) {
        throw std::overflow_error("codebook: total size exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(wide);
}

}  // namespace

std::uint64_t pair_size(const PairGrid& grid) {
    return static_cast<std::uint64_t>(grid.size());
}

CodebookLayout CodebookLayout::from_sizes(std::vector<std::uint64_t> sizes) {
    if (sizes.empty()) {
        throw std::invalid_argument("codebook layout: need at least one pair");
    }
    CodebookLayout layout;
    layout.pair_sizes = std::move(sizes);
    layout.place_values.resize(layout.pair_sizes.size());
    std::uint64_t place = 1;
    for (std::size_t j = 0; j < layout.pair_sizes.size(); ++j) {
        if (layout.pair_sizes[j] == 0) {
            throw std::invalid_argument("codebook layout: pair " + std::to_string(j) +
                                        " has zero size");
        }
        layout.place_values[j] = place;
        place = checked_mul(place, layout.pair_sizes[j]);
    }
    layout.total_size = place;
    return layout;
}

CodebookLayout CodebookLayout::from_config(const QuantizerConfig& config) {
    std::vector<std::uint64_t> sizes;
    sizes.reserve(config.pairs());
    for (std::size_t j = 0; j < config.pairs(); ++j) {
        sizes.push_back(pair_size(config.grid(j)));
    }
    return from_sizes(std::move(sizes));
}

std::uint64_t encode_global(std::span<const std::uint32_t> pair_codes,
                            const CodebookLayout& layout) {
    if (pair_codes.size() != layout.pairs()) {
        throw std::invalid_argument("encode_global: expected " + std::to_string(layout.pairs()) +
                                    " pair codes, got " + std::to_string(pair_codes.size()));
    }
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < pair_codes.size(); ++j) {
        if (pair_codes[j] >= layout.pair_sizes[j]) {
            throw std::out_of_range("encode_global: pair " + std::to_string(j) + " code " +
                                    std::to_string(pair_codes[j]) + " out of range [0, " +
                                    std::to_string(layout.pair_sizes[j]) + ")");
        }
        code += static_cast<std::uint64_t>(pair_codes[j]) * layout.place_values[j];
    }
    return code;
}

std::vector<std::uint32_t> decode_global(std::uint64_t code, const CodebookLayout& layout) {
    if (code >= layout.total_size) {
        throw std::out_of_range("decode_global: code " + std::to_string(code) +
                                " out of range [0, " + std::to_string(layout.total_size) + ")");
    }
    std::vector<std::uint32_t> pair_codes(layout.pairs());
    for (std::size_t j = 0; j < layout.pairs(); ++j) {
        pair_codes[j] = static_cast<std::uint32_t>(code % layout.pair_sizes[j]);
        code /= layout.pair_sizes[j];
    }
    return pair_codes;
}

double bits_per_token(const CodebookLayout& layout) {
    double bits = 0.0;
    for (std::uint64_t size : layout.pair_sizes) {
        bits += std::log2(static_cast<double>(size));
    }
    return bits;
}

double bandwidth_bits_per_second(const CodebookLayout& layout, double tokens_per_second) {
    if (!(tokens_per_second > 0.0)) {
        throw std::invalid_argument("bandwidth: tokens_per_second must be positive");
    }
    return tokens_per_second * bits_per_token(layout);
}

}  // namespace q2d2
