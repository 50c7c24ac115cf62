#pragma once

#include "subsums/subset.hpp"

#include <cstdint>
#include <optional>

namespace subsums {

inline constexpr std::uint32_t kDefaultValidCap = 20;

/// The smallest non-empty S' ⊆ S (by size, then rank) with
/// |Σ(S')| > |⟨S'⟩|/2, if any. Throws std::length_error when |S| > cap.
std::optional<GroupSubset> large_sigma_subset(const GroupSubset& s,
                                              std::uint32_t cap = kDefaultValidCap);

/// |Σ(S')| <= |⟨S'⟩|/2 for every non-empty S' ⊆ S.
inline bool is_valid_subset(const GroupSubset& s, std::uint32_t cap = kDefaultValidCap) {
    return !large_sigma_subset(s, cap).has_value();
}

}  // namespace subsums
