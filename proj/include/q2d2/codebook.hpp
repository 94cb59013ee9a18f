#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "q2d2/quantizer.hpp"

namespace q2d2 {

/// The implicit product codebook over a quantizer's pair grids.
///
/// pair_sizes holds the REALIZED point count of each grid (2*lx*ly for
/// rhombic, lx*ly otherwise); the mixed-radix place values make pair-code
/// tuples and global codes in [0, total_size) mutually convertible.
struct CodebookLayout {
    std::vector<std::uint64_t> pair_sizes;
    std::vector<std::uint64_t> place_values;  // place[0] = 1, place[j] = place[j-1] * pair_sizes[j-1]
    std::uint64_t total_size = 0;

    static CodebookLayout from_config(const QuantizerConfig& config);
    static CodebookLayout from_sizes(std::vector<std::uint64_t> sizes);

    std::size_t pairs() const { return pair_sizes.size(); }
};

/// Realized point count of one pair grid.
std::uint64_t pair_size(const PairGrid& grid);

/// Mixed-radix composition of per-pair codes into one token value.
std::uint64_t encode_global(std::span<const std::uint32_t> pair_codes,
                            const CodebookLayout& layout);

/// Inverse of encode_global.
std::vector<std::uint32_t> decode_global(std::uint64_t code, const CodebookLayout& layout);

/// log2 of the codebook size, computed as a sum of per-pair log2 terms so it
/// stays finite even when the integer product would overflow.
double bits_per_token(const CodebookLayout& layout);

/// Raw bitrate in bits/s: tokens_per_second * bits_per_token. No entropy
/// coding is assumed anywhere.
double bandwidth_bits_per_second(const CodebookLayout& layout, double tokens_per_second);

}  // namespace q2d2
