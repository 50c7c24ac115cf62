#include "subsums/naive.hpp"

#include <stdexcept>
#include <vector>

namespace subsums {

GroupSubset naive_sigma(const GroupSubset& s) {
    if (s.size() > 24) throw std::length_error("naive Σ enumeration limited to |S| <= 24");
    const auto& g = s.group();
    const auto el = s.elements();
    std::vector<Element> sums{0};
    sums.reserve(std::size_t{1} << el.size());
    for (Element x : el) {
        const auto n = sums.size();
        for (std::size_t i = 0; i < n; ++i) sums.push_back(g.add(sums[i], x));
    }
    GroupSubset out(g);
    for (Element e : sums) out.insert(e);
    return out;
}

}  // namespace subsums
