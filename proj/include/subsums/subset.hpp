#pragma once

#include "subsums/group.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subsums {

/// A subset of a finite abelian group as a dense bit array indexed by flat
/// element index. Bits at positions >= |G| are always zero.
class GroupSubset {
public:
    using Words = boost::container::small_vector<std::uint64_t, 2>;

    explicit GroupSubset(GroupSpec g);

    static GroupSubset from_elements(GroupSpec g, std::span<const Element> elements);
    static GroupSubset from_elements(GroupSpec g, std::initializer_list<Element> elements);
    static GroupSubset full(GroupSpec g);
    static GroupSubset zero(GroupSpec g);
    static GroupSubset from_hex(GroupSpec g, std::string_view hex);
    /// Bit i of `mask` selects element i. Requires |G| <= 64.
    static GroupSubset from_mask(GroupSpec g, std::uint64_t mask);

    const GroupSpec& group() const { return group_; }

    std::size_t size() const;
    bool empty() const;
    bool is_full() const { return size() == group_.order(); }
    bool contains(Element e) const;
    void insert(Element e);
    void erase(Element e);
    void clear();

    std::vector<Element> elements() const;
    /// Smallest flat index in the set; the set must be non-empty.
    Element min_element() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                f(static_cast<Element>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const { return {words_.data(), words_.size()}; }
    std::span<std::uint64_t> mutable_words() { return {words_.data(), words_.size()}; }
    /// Low 64 bits; exact when |G| <= 64.
    std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

    GroupSubset& operator|=(const GroupSubset& o);
    GroupSubset& operator&=(const GroupSubset& o);
    GroupSubset& operator-=(const GroupSubset& o);
    friend GroupSubset operator|(GroupSubset a, const GroupSubset& b) { return a |= b; }
    friend GroupSubset operator&(GroupSubset a, const GroupSubset& b) { return a &= b; }
    friend GroupSubset operator-(GroupSubset a, const GroupSubset& b) { return a -= b; }

    GroupSubset complement() const;
    bool is_subset_of(const GroupSubset& o) const;
    bool intersects(const GroupSubset& o) const;

    /// Hex digits, nibble j holding elements 4j..4j+3 (bit 0 = element 4j).
    std::string to_hex() const;

    friend bool operator==(const GroupSubset& a, const GroupSubset& b);
    /// Order by the integer value of the bit string (element i has weight 2^i).
    friend std::strong_ordering rank_compare(const GroupSubset& a, const GroupSubset& b);

private:
    void require_same_group(const GroupSubset& o) const;

    GroupSpec group_;
    Words words_;
};

struct RankLess {
    bool operator()(const GroupSubset& a, const GroupSubset& b) const {
        return rank_compare(a, b) < 0;
    }
};

struct SubsetHash {
    std::size_t operator()(const GroupSubset& s) const;
};

/// Comma-separated element literals: "1,2,3", "-1,-2", "(1,0),(0,1)".
GroupSubset parse_subset(const GroupSpec& g, std::string_view text);

/// "{0,1,6,11}" using the element literal syntax.
std::string format_subset(const GroupSubset& s);

GroupSubset negate(const GroupSubset& s);
bool is_symmetric(const GroupSubset& s);
/// S ∩ (−S) = ∅
bool is_asymmetric(const GroupSubset& s);

}  // namespace subsums
