#include "subsums/valid.hpp"

#include "subsums/sumset.hpp"

#include <bit>
#include <stdexcept>

namespace subsums {

namespace {

struct Search {
    const std::vector<Element>& elems;
    std::uint64_t best = 0;
    int best_size = 0;

    bool better(std::uint64_t mask) const {
        const int n = std::popcount(mask);
        return best == 0 || n < best_size || (n == best_size && mask < best);
    }

    // Extends the current subset with elements of index >= i.
    void dfs(std::size_t i, std::uint64_t mask, const GroupSubset& sig, const GroupSubset& spn) {
        for (std::size_t j = i; j < elems.size(); ++j) {
            const std::uint64_t next = mask | (std::uint64_t{1} << j);
            if (best != 0 && std::popcount(next) > best_size) return;
            const Element x = elems[j];
            GroupSubset s2 = sig | shift(sig, x);
            GroupSubset w2 =
                spn.contains(x) ? spn : sumset(spn, cyclic_subgroup(spn.group(), x).carrier());
            if (2 * s2.size() > w2.size()) {
                if (better(next)) {
                    best = next;
                    best_size = std::popcount(next);
                }
                continue;
            }
            dfs(j + 1, next, s2, w2);
        }
    }
};

}  // namespace

std::optional<GroupSubset> large_sigma_subset(const GroupSubset& s, std::uint32_t cap) {
    if (s.size() > cap) {
        throw std::length_error("valid-subset check limited to |S| <= " + std::to_string(cap) +
                                ", got " + std::to_string(s.size()));
    }
    const auto elems = s.elements();
    Search search{elems};
    const auto zero = GroupSubset::zero(s.group());
    search.dfs(0, 0, zero, zero);
    if (search.best == 0) return std::nullopt;
    GroupSubset out(s.group());
    for (std::size_t j = 0; j < elems.size(); ++j) {
        if (search.best >> j & 1) out.insert(elems[j]);
    }
    return out;
}

}  // namespace subsums
