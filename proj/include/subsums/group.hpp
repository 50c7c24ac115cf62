#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subsums {

/// Flat index of a group element, in [0, order).
using Element = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 16;

class ShiftTable;

/// A finite abelian group Z_{d_1} x ... x Z_{d_k}, stored exactly as the
/// given factor list. Elements are flat mixed-radix indices with the last
/// factor varying fastest, so Z4xZ2 maps (c0, c1) to 2*c0 + c1.
///
/// GroupSpec is a cheap handle: copies share the same immutable state,
/// including the lazily built ShiftTable.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::uint32_t> factors,
                       std::uint64_t max_order = kDefaultMaxOrder);

    std::span<const std::uint32_t> factors() const;
    std::span<const std::uint32_t> strides() const;
    std::uint32_t order() const;
    std::size_t word_count() const;

    /// Length of the innermost factor; the bit layout is rows of this length.
    std::uint32_t row_length() const;
    std::uint32_t row_count() const;

    /// Invariant factors d_1 | d_2 | ... (trivial group gives {1}).
    std::vector<std::uint32_t> canonical_form() const;
    bool is_cyclic() const { return canonical_form().size() == 1; }

    std::vector<std::uint32_t> coordinates(Element e) const;
    Element from_coordinates(std::span<const std::int64_t> coords) const;

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element multiple(Element a, std::uint64_t n) const;
    std::uint32_t element_order(Element a) const;

    void check_element(Element a) const;

    /// "Z4xZ2"
    std::string to_string() const;

    const ShiftTable& shift_table() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b);

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

GroupSpec make_group(std::vector<std::uint32_t> factors,
                     std::uint64_t max_order = kDefaultMaxOrder);

/// Parses `Z<d>` terms joined by `x`, case-insensitively, e.g. "Z4xZ2".
GroupSpec parse_group(std::string_view text, std::uint64_t max_order = kDefaultMaxOrder);

/// A flat index ("7") or a coordinate tuple ("(3,1)"), optionally prefixed
/// by '-' for the group inverse.
Element parse_element(const GroupSpec& g, std::string_view text);

std::string format_element(const GroupSpec& g, Element e);

/// Invariant factors of Z_{d_1} x ... x Z_{d_k} via prime-power splitting.
std::vector<std::uint32_t> invariant_factors(std::span<const std::uint32_t> factors);

/// Canonical forms (invariant factor lists) of every abelian group of order n.
std::vector<std::vector<std::uint32_t>> abelian_groups_of_order(std::uint32_t n);
std::vector<std::vector<std::uint32_t>> abelian_groups_up_to(std::uint32_t max_order);

std::string format_factors(std::span<const std::uint32_t> factors);

}  // namespace subsums
