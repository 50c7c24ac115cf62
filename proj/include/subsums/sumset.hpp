#pragma once

#include "subsums/subgroup.hpp"

#include <cstdint>
#include <vector>

namespace subsums {

/// B + x
GroupSubset shift(const GroupSubset& b, Element x);

/// Subset sums of S, including the empty sum.
GroupSubset sigma(const GroupSubset& s);
/// Sums over non-empty subsets of S.
GroupSubset sigma_star(const GroupSubset& s);

GroupSubset sumset(const GroupSubset& x, const GroupSubset& y);
/// jA, with 0A = {0}.
GroupSubset iterated_sumset(std::uint32_t j, const GroupSubset& a);

/// Sums of exactly k distinct elements of A.
GroupSubset k_wedge(std::uint32_t k, const GroupSubset& a);
/// All layers 0∧A, 1∧A, ..., |A|∧A from one pass of the DP.
std::vector<GroupSubset> k_wedge_layers(const GroupSubset& a);

/// {g : X + g = X}; the empty set has the whole group as its period.
Subgroup period(const GroupSubset& x);
bool is_aperiodic(const GroupSubset& x);
bool is_periodic_under(const GroupSubset& x, const Subgroup& h);

/// |(B + x) \ B|
std::uint32_t lambda(const GroupSubset& b, Element x);

/// S ∪ {0} ∪ (−S)
GroupSubset hat(const GroupSubset& s);

}  // namespace subsums
