#include "subsums/sumset.hpp"

#include "subsums/shift_table.hpp"

#include <bit>
#include <stdexcept>

namespace subsums {

namespace {

void require_same(const GroupSubset& a, const GroupSubset& b) {
    if (!(a.group() == b.group())) {
        throw std::invalid_argument("group mismatch: " + a.group().to_string() + " vs " +
                                    b.group().to_string());
    }
}

inline void shift_into(const GroupSubset& src, Element x, GroupSubset& dst) {
    src.group().shift_table().shift_or(src.words(), x, dst.mutable_words());
}

}  // namespace

GroupSubset shift(const GroupSubset& b, Element x) {
    b.group().check_element(x);
    GroupSubset out(b.group());
    shift_into(b, x, out);
    return out;
}

GroupSubset sigma(const GroupSubset& s) {
    const auto& g = s.group();
    GroupSubset b = GroupSubset::zero(g);
    GroupSubset tmp(g);
    s.for_each([&](Element x) {
        if (b.is_full()) return;
        tmp = b;
        shift_into(b, x, tmp);
        std::swap(b, tmp);
    });
    return b;
}

GroupSubset sigma_star(const GroupSubset& s) {
    // b: sums over all subsets seen so far, n: sums over non-empty ones
    const auto& g = s.group();
    GroupSubset b = GroupSubset::zero(g);
    GroupSubset n(g);
    GroupSubset tmp(g);
    s.for_each([&](Element x) {
        shift_into(b, x, n);
        tmp = b;
        shift_into(b, x, tmp);
        std::swap(b, tmp);
    });
    return n;
}

GroupSubset sumset(const GroupSubset& x, const GroupSubset& y) {
    require_same(x, y);
    const GroupSubset& small = x.size() <= y.size() ? x : y;
    const GroupSubset& large = x.size() <= y.size() ? y : x;
    GroupSubset out(x.group());
    small.for_each([&](Element e) {
        if (!out.is_full()) shift_into(large, e, out);
    });
    return out;
}

GroupSubset iterated_sumset(std::uint32_t j, const GroupSubset& a) {
    GroupSubset result = GroupSubset::zero(a.group());
    GroupSubset power = a;
    while (j > 0) {
        if (j & 1) result = sumset(result, power);
        j >>= 1;
        if (j > 0) power = sumset(power, power);
    }
    return result;
}

std::vector<GroupSubset> k_wedge_layers(const GroupSubset& a) {
    const auto& g = a.group();
    const std::size_t n = a.size();
    std::vector<GroupSubset> layer(n + 1, GroupSubset(g));
    layer[0].insert(0);
    std::size_t used = 0;
    a.for_each([&](Element x) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) shift_into(layer[k - 1], x, layer[k]);
    });
    return layer;
}

GroupSubset k_wedge(std::uint32_t k, const GroupSubset& a) {
    const std::size_t n = a.size();
    if (k > n) {
        throw std::out_of_range("k_wedge: k = " + std::to_string(k) + " exceeds |A| = " +
                                std::to_string(n));
    }
    const auto& g = a.group();
    std::vector<GroupSubset> layer(k + 1, GroupSubset(g));
    layer[0].insert(0);
    std::size_t used = 0;
    a.for_each([&](Element x) {
        ++used;
        const std::size_t top = used < k ? used : k;
        for (std::size_t i = top; i >= 1; --i) shift_into(layer[i - 1], x, layer[i]);
    });
    return layer[k];
}

Subgroup period(const GroupSubset& x) {
    const auto& g = x.group();
    if (x.empty() || x.is_full()) return Subgroup::from_carrier(GroupSubset::full(g));
    // K ⊆ X − x0 for any x0 ∈ X, so only those translates need testing
    const Element x0 = x.min_element();
    GroupSubset carrier(g);
    GroupSubset tmp(g);
    x.for_each([&](Element e) {
        const Element d = g.sub(e, x0);
        tmp.clear();
        shift_into(x, d, tmp);
        if (tmp == x) carrier.insert(d);
    });
    return Subgroup::from_carrier(std::move(carrier));
}

bool is_aperiodic(const GroupSubset& x) { return period(x).order() == 1; }

bool is_periodic_under(const GroupSubset& x, const Subgroup& h) {
    require_same(x, h.carrier());
    GroupSubset tmp(x.group());
    for (Element e : h.generators()) {
        tmp.clear();
        shift_into(x, e, tmp);
        if (!(tmp == x)) return false;
    }
    return true;
}

std::uint32_t lambda(const GroupSubset& b, Element x) {
    b.group().check_element(x);
    GroupSubset t(b.group());
    shift_into(b, x, t);
    std::uint32_t c = 0;
    const auto tw = t.words();
    const auto bw = b.words();
    for (std::size_t i = 0; i < tw.size(); ++i) c += std::popcount(tw[i] & ~bw[i]);
    return c;
}

GroupSubset hat(const GroupSubset& s) {
    GroupSubset out = s | negate(s);
    out.insert(0);
    return out;
}

}  // namespace subsums
