#pragma once

#include "subsums/subset.hpp"

#include <cstdint>
#include <vector>

namespace subsums {

inline constexpr std::uint32_t kDefaultSubgroupCap = 512;

class Subgroup {
public:
    /// The trivial subgroup {0}.
    explicit Subgroup(const GroupSpec& g);

    /// Throws std::invalid_argument if `carrier` is not closed under the group law.
    static Subgroup from_carrier(GroupSubset carrier);

    const GroupSpec& group() const { return carrier_.group(); }
    const GroupSubset& carrier() const { return carrier_; }
    /// A generating set; greedy, so not necessarily minimal.
    const std::vector<Element>& generators() const { return generators_; }
    std::uint32_t order() const { return static_cast<std::uint32_t>(carrier_.size()); }
    bool contains(Element e) const { return carrier_.contains(e); }
    bool is_trivial() const { return order() == 1; }

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.carrier_ == b.carrier_; }

private:
    Subgroup(GroupSubset carrier, std::vector<Element> generators);

    GroupSubset carrier_;
    std::vector<Element> generators_;

    friend Subgroup span(const GroupSubset& s);
    friend Subgroup join(const Subgroup& a, const Subgroup& b);
    friend Subgroup cyclic_subgroup(const GroupSpec& g, Element x);
};

/// The least subgroup containing `s`; span(∅) = {0}.
Subgroup span(const GroupSubset& s);
Subgroup cyclic_subgroup(const GroupSpec& g, Element x);
Subgroup join(const Subgroup& a, const Subgroup& b);

bool is_closed(const GroupSubset& s);

/// Every subgroup exactly once, sorted by order then by carrier rank.
std::vector<Subgroup> subgroups(const GroupSpec& g, std::uint32_t cap = kDefaultSubgroupCap);

/// G/H as a group in its own right, with the canonical projection.
///
/// Coset ids are flat indices of `group()`, with id 0 = H. The quotient
/// group's factors come from a basis of G/H chosen greedily by element
/// order, so the factor list is in invariant-factor form.
class Quotient {
public:
    Quotient(const GroupSpec& g, const Subgroup& h);

    const GroupSpec& group() const { return quotient_; }
    const GroupSpec& parent() const { return parent_; }
    const Subgroup& kernel() const { return kernel_; }

    Element project(Element e) const { return projection_[e]; }
    GroupSubset project(const GroupSubset& s) const;
    /// Union of the cosets selected by `q`.
    GroupSubset preimage(const GroupSubset& q) const;
    GroupSubset coset(Element id) const;
    /// Minimal flat index of the coset, used as its display label.
    Element label(Element id) const { return labels_[id]; }

private:
    GroupSpec parent_;
    Subgroup kernel_;
    GroupSpec quotient_;
    std::vector<Element> projection_;
    std::vector<Element> labels_;
};

/// A = a + E with E an elementary abelian 2-subgroup and |E| = |A|.
bool is_2_coset(const GroupSubset& a);

}  // namespace subsums
