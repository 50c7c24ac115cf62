#pragma once

#include "subsums/subset.hpp"

namespace subsums {

/// Σ(S) by listing all 2^|S| subset sums with plain group addition.
/// Throws std::length_error when |S| > 24.
GroupSubset naive_sigma(const GroupSubset& s);

}  // namespace subsums
