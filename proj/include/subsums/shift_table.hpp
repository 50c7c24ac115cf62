#pragma once

#include "subsums/group.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace subsums {

/// Translation by a group element on dense bit arrays.
///
/// The bit layout is |G|/L rows of L = d_k bits. Translating by x rotates
/// every row by the last coordinate of x and permutes whole rows by the
/// prefix coordinates, so a shift costs O(|G|/64 + rows) word operations.
/// Row permutations are tabulated for every row offset when the row count
/// is small enough; larger groups compute them on the fly.
class ShiftTable {
public:
    explicit ShiftTable(std::span<const std::uint32_t> factors);

    /// dst |= src + x. dst must not alias src.
    void shift_or(std::span<const std::uint64_t> src, Element x,
                  std::span<std::uint64_t> dst) const;

    /// The permutation e -> e + x of flat indices, materialised.
    std::vector<Element> permutation(Element x) const;

    bool tabulated() const { return !row_maps_.empty(); }

private:
    std::uint32_t row_target(std::uint32_t row, std::uint32_t row_offset) const;

    std::uint32_t order_ = 1;
    std::uint32_t row_len_ = 1;
    std::uint32_t rows_ = 1;
    std::vector<std::uint32_t> prefix_factors_;
    std::vector<std::uint32_t> prefix_strides_;
    // row_maps_[offset * rows_ + row] = destination row
    std::vector<std::uint32_t> row_maps_;
};

}  // namespace subsums
