#include "subsums/shift_table.hpp"

#include <cassert>

namespace subsums {

namespace {

constexpr std::uint32_t kMaxTabulatedRows = 1024;

inline std::uint64_t load_bits(std::span<const std::uint64_t> src, std::size_t pos,
                               std::uint32_t n) {
    const std::size_t w = pos >> 6;
    const std::uint32_t o = pos & 63;
    std::uint64_t v = src[w] >> o;
    if (o != 0 && o + n > 64) v |= src[w + 1] << (64 - o);
    if (n < 64) v &= (std::uint64_t{1} << n) - 1;
    return v;
}

inline void or_bits(std::span<std::uint64_t> dst, std::size_t pos, std::uint64_t v,
                    std::uint32_t n) {
    const std::size_t w = pos >> 6;
    const std::uint32_t o = pos & 63;
    dst[w] |= v << o;
    if (o != 0 && o + n > 64) dst[w + 1] |= v >> (64 - o);
}

inline void copy_bits_or(std::span<std::uint64_t> dst, std::size_t dpos,
                         std::span<const std::uint64_t> src, std::size_t spos,
                         std::size_t len) {
    while (len > 0) {
        const auto n = static_cast<std::uint32_t>(len < 64 ? len : 64);
        const auto v = load_bits(src, spos, n);
        if (v) or_bits(dst, dpos, v, n);
        spos += n;
        dpos += n;
        len -= n;
    }
}

}  // namespace

ShiftTable::ShiftTable(std::span<const std::uint32_t> factors) {
    order_ = 1;
    for (auto d : factors) order_ *= d;
    row_len_ = factors.back();
    rows_ = order_ / row_len_;
    prefix_factors_.assign(factors.begin(), factors.end() - 1);
    prefix_strides_.assign(prefix_factors_.size(), 1);
    for (std::size_t i = prefix_factors_.size(); i-- > 1;) {
        prefix_strides_[i - 1] = prefix_strides_[i] * prefix_factors_[i];
    }
    if (rows_ > 1 && rows_ <= kMaxTabulatedRows) {
        row_maps_.resize(std::size_t{rows_} * rows_);
        for (std::uint32_t off = 0; off < rows_; ++off) {
            for (std::uint32_t r = 0; r < rows_; ++r) {
                row_maps_[std::size_t{off} * rows_ + r] = row_target(r, off);
            }
        }
    }
}

std::uint32_t ShiftTable::row_target(std::uint32_t row, std::uint32_t row_offset) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < prefix_factors_.size(); ++i) {
        const auto s = prefix_strides_[i];
        const auto d = prefix_factors_[i];
        out += (((row / s) % d + (row_offset / s) % d) % d) * s;
    }
    return out;
}

void ShiftTable::shift_or(std::span<const std::uint64_t> src, Element x,
                          std::span<std::uint64_t> dst) const {
    assert(x < order_);
    const std::uint32_t rot = x % row_len_;
    const std::uint32_t off = x / row_len_;

    if (order_ <= 64 && rows_ == 1) {
        const std::uint64_t b = src[0];
        if (rot == 0) {
            dst[0] |= b;
            return;
        }
        const std::uint64_t mask = order_ == 64 ? ~std::uint64_t{0}
                                                : (std::uint64_t{1} << order_) - 1;
        dst[0] |= ((b << rot) | (b >> (order_ - rot))) & mask;
        return;
    }

    const std::uint32_t* map = tabulated() ? &row_maps_[std::size_t{off} * rows_] : nullptr;
    for (std::uint32_t r = 0; r < rows_; ++r) {
        const std::uint32_t target = rows_ == 1 ? 0 : (map ? map[r] : row_target(r, off));
        const std::size_t s0 = std::size_t{r} * row_len_;
        const std::size_t d0 = std::size_t{target} * row_len_;
        // row bits [0, L-rot) land at [rot, L); bits [L-rot, L) wrap to [0, rot)
        copy_bits_or(dst, d0 + rot, src, s0, row_len_ - rot);
        if (rot) copy_bits_or(dst, d0, src, s0 + row_len_ - rot, rot);
    }
}

std::vector<Element> ShiftTable::permutation(Element x) const {
    const std::uint32_t rot = x % row_len_;
    const std::uint32_t off = x / row_len_;
    std::vector<Element> perm(order_);
    for (std::uint32_t r = 0; r < rows_; ++r) {
        const auto target = row_target(r, off);
        for (std::uint32_t c = 0; c < row_len_; ++c) {
            perm[r * row_len_ + c] = target * row_len_ + (c + rot) % row_len_;
        }
    }
    return perm;
}

}  // namespace subsums
