#include "subsums/subgroup.hpp"

#include "subsums/sumset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace subsums {

namespace {

GroupSubset cyclic_carrier(const GroupSpec& g, Element x) {
    GroupSubset c(g);
    Element e = 0;
    do {
        c.insert(e);
        e = g.add(e, x);
    } while (e != 0);
    return c;
}

// Extends the subgroup `w` by x: w + <x>.
void absorb(GroupSubset& w, Element x) {
    if (w.contains(x)) return;
    w = sumset(w, cyclic_carrier(w.group(), x));
}

std::uint32_t order_mod(const GroupSpec& g, const GroupSubset& w, Element y) {
    std::uint32_t n = 1;
    Element e = y;
    while (!w.contains(e)) {
        e = g.add(e, y);
        ++n;
    }
    return n;
}

}  // namespace

Subgroup::Subgroup(const GroupSpec& g) : carrier_(GroupSubset::zero(g)) {}

Subgroup::Subgroup(GroupSubset carrier, std::vector<Element> generators)
    : carrier_(std::move(carrier)), generators_(std::move(generators)) {}

bool is_closed(const GroupSubset& s) {
    if (!s.contains(0)) return false;
    bool closed = true;
    s.for_each([&](Element x) {
        if (closed && !(shift(s, x) == s)) closed = false;
    });
    return closed;
}

Subgroup Subgroup::from_carrier(GroupSubset carrier) {
    if (!is_closed(carrier)) {
        throw std::invalid_argument("set " + format_subset(carrier) + " is not a subgroup of " +
                                    carrier.group().to_string());
    }
    GroupSubset w = GroupSubset::zero(carrier.group());
    std::vector<Element> gens;
    carrier.for_each([&](Element e) {
        if (!w.contains(e)) {
            gens.push_back(e);
            absorb(w, e);
        }
    });
    return Subgroup(std::move(carrier), std::move(gens));
}

Subgroup span(const GroupSubset& s) {
    GroupSubset w = GroupSubset::zero(s.group());
    std::vector<Element> gens;
    s.for_each([&](Element e) {
        if (!w.contains(e)) {
            gens.push_back(e);
            absorb(w, e);
        }
    });
    return Subgroup(std::move(w), std::move(gens));
}

Subgroup cyclic_subgroup(const GroupSpec& g, Element x) {
    g.check_element(x);
    std::vector<Element> gens;
    if (x != 0) gens.push_back(x);
    return Subgroup(cyclic_carrier(g, x), std::move(gens));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    GroupSubset w = a.carrier();
    std::vector<Element> gens = a.generators();
    for (Element e : b.generators()) {
        if (!w.contains(e)) {
            gens.push_back(e);
            absorb(w, e);
        }
    }
    return Subgroup(std::move(w), std::move(gens));
}

std::vector<Subgroup> subgroups(const GroupSpec& g, std::uint32_t cap) {
    if (g.order() > cap) {
        throw std::length_error("subgroup enumeration limited to order " + std::to_string(cap) +
                                ", got " + std::to_string(g.order()));
    }
    std::vector<Subgroup> cyclic;
    std::unordered_set<GroupSubset, SubsetHash> seen;
    for (Element x = 0; x < g.order(); ++x) {
        auto c = cyclic_subgroup(g, x);
        if (seen.insert(c.carrier()).second) cyclic.push_back(std::move(c));
    }
    std::vector<Subgroup> all = cyclic;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (const auto& c : cyclic) {
            if (c.carrier().is_subset_of(all[i].carrier())) continue;
            auto j = join(all[i], c);
            if (seen.insert(j.carrier()).second) all.push_back(std::move(j));
        }
    }
    std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return rank_compare(a.carrier(), b.carrier()) < 0;
    });
    return all;
}

Quotient::Quotient(const GroupSpec& g, const Subgroup& h)
    : parent_(g), kernel_(h), quotient_(std::vector<std::uint32_t>{1}) {
    if (!(h.group() == g)) throw std::invalid_argument("subgroup belongs to a different group");
    const GroupSubset& hc = h.carrier();

    // Basis of G/H: repeatedly take an element of maximal order modulo W whose
    // multiples meet W only inside H, so <y> + W is a direct extension.
    GroupSubset w = hc;
    std::vector<Element> basis;
    std::vector<std::uint32_t> orders;
    while (!w.is_full()) {
        std::uint32_t best = 0;
        Element pick = 0;
        std::uint32_t max_mod_w = 0;
        for (Element y = 0; y < g.order(); ++y) {
            if (w.contains(y)) continue;
            max_mod_w = std::max(max_mod_w, order_mod(g, w, y));
        }
        for (Element y = 0; y < g.order() && best == 0; ++y) {
            if (w.contains(y)) continue;
            const auto ow = order_mod(g, w, y);
            if (ow == max_mod_w && order_mod(g, hc, y) == ow) {
                best = ow;
                pick = y;
            }
        }
        if (best == 0) throw std::logic_error("quotient basis construction failed");
        basis.push_back(pick);
        orders.push_back(best);
        absorb(w, pick);
    }

    std::vector<std::uint32_t> factors(orders.rbegin(), orders.rend());
    if (factors.empty()) factors.push_back(1);
    quotient_ = GroupSpec(factors, g.order());

    // quotient coordinate i (ascending factor list) belongs to basis[r-1-i]
    const std::size_t r = basis.size();
    projection_.assign(g.order(), 0);
    labels_.assign(quotient_.order(), 0);
    std::vector<std::uint32_t> coords(r, 0);
    const auto hel = hc.elements();
    for (Element id = 0; id < quotient_.order(); ++id) {
        Element rep = 0;
        Element rest = id;
        for (std::size_t i = r; i-- > 0;) {
            const auto d = factors[i];
            const auto c = rest % d;
            rest /= d;
            rep = g.add(rep, g.multiple(basis[r - 1 - i], c));
        }
        Element lo = g.order();
        for (Element e : hel) {
            const Element x = g.add(rep, e);
            projection_[x] = id;
            lo = std::min(lo, x);
        }
        labels_[id] = lo;
    }
}

GroupSubset Quotient::project(const GroupSubset& s) const {
    GroupSubset out(quotient_);
    s.for_each([&](Element e) { out.insert(projection_[e]); });
    return out;
}

GroupSubset Quotient::preimage(const GroupSubset& q) const {
    GroupSubset out(parent_);
    for (Element e = 0; e < parent_.order(); ++e) {
        if (q.contains(projection_[e])) out.insert(e);
    }
    return out;
}

GroupSubset Quotient::coset(Element id) const {
    quotient_.check_element(id);
    GroupSubset out(parent_);
    for (Element e = 0; e < parent_.order(); ++e) {
        if (projection_[e] == id) out.insert(e);
    }
    return out;
}

bool is_2_coset(const GroupSubset& a) {
    if (a.empty()) throw std::invalid_argument("is_2_coset requires a non-empty set");
    const auto n = a.size();
    if ((n & (n - 1)) != 0) return false;
    const auto& g = a.group();
    const GroupSubset e = shift(a, g.neg(a.min_element()));
    bool elementary = true;
    e.for_each([&](Element x) {
        if (g.add(x, x) != 0) elementary = false;
    });
    return elementary && is_closed(e);
}

}  // namespace subsums
