#include "subsums/subset.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace subsums {

namespace {

std::uint64_t tail_mask(std::uint32_t order) {
    const auto r = order % 64;
    return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

}  // namespace

GroupSubset::GroupSubset(GroupSpec g) : group_(std::move(g)), words_(group_.word_count(), 0) {}

GroupSubset GroupSubset::from_elements(GroupSpec g, std::span<const Element> elements) {
    GroupSubset s(std::move(g));
    for (auto e : elements) s.insert(e);
    return s;
}

GroupSubset GroupSubset::from_elements(GroupSpec g, std::initializer_list<Element> elements) {
    return from_elements(std::move(g), std::span<const Element>(elements.begin(), elements.size()));
}

GroupSubset GroupSubset::full(GroupSpec g) {
    GroupSubset s(std::move(g));
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.words_.back() &= tail_mask(s.group_.order());
    return s;
}

GroupSubset GroupSubset::zero(GroupSpec g) {
    GroupSubset s(std::move(g));
    s.insert(0);
    return s;
}

GroupSubset GroupSubset::from_mask(GroupSpec g, std::uint64_t mask) {
    if (g.order() > 64) throw std::invalid_argument("from_mask requires |G| <= 64");
    GroupSubset s(std::move(g));
    if (mask & ~tail_mask(s.group_.order())) {
        throw std::out_of_range("mask has bits beyond the group order");
    }
    s.words_[0] = mask;
    return s;
}

GroupSubset GroupSubset::from_hex(GroupSpec g, std::string_view hex) {
    GroupSubset s(std::move(g));
    const auto n = s.group_.order();
    if (hex.size() != (n + 3) / 4) {
        throw std::invalid_argument("hex subset has " + std::to_string(hex.size()) +
                                    " digits, expected " + std::to_string((n + 3) / 4));
    }
    for (std::size_t j = 0; j < hex.size(); ++j) {
        const char c = hex[j];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
        for (int b = 0; b < 4; ++b) {
            if (v >> b & 1) {
                const auto e = j * 4 + b;
                if (e >= n) throw std::invalid_argument("hex subset sets bits beyond the group order");
                s.insert(static_cast<Element>(e));
            }
        }
    }
    return s;
}

std::size_t GroupSubset::size() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool GroupSubset::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool GroupSubset::contains(Element e) const {
    group_.check_element(e);
    return words_[e >> 6] >> (e & 63) & 1;
}

void GroupSubset::insert(Element e) {
    group_.check_element(e);
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void GroupSubset::erase(Element e) {
    group_.check_element(e);
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

void GroupSubset::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::vector<Element> GroupSubset::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
}

Element GroupSubset::min_element() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
    }
    throw std::invalid_argument("min_element of an empty set");
}

void GroupSubset::require_same_group(const GroupSubset& o) const {
    if (!(group_ == o.group_)) {
        throw std::invalid_argument("group mismatch: " + group_.to_string() + " vs " +
                                    o.group_.to_string());
    }
}

GroupSubset& GroupSubset::operator|=(const GroupSubset& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

GroupSubset& GroupSubset::operator&=(const GroupSubset& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

GroupSubset& GroupSubset::operator-=(const GroupSubset& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

GroupSubset GroupSubset::complement() const {
    GroupSubset s = *this;
    for (auto& w : s.words_) w = ~w;
    s.words_.back() &= tail_mask(group_.order());
    return s;
}

bool GroupSubset::is_subset_of(const GroupSubset& o) const {
    require_same_group(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
}

bool GroupSubset::intersects(const GroupSubset& o) const {
    require_same_group(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & o.words_[i]) return true;
    }
    return false;
}

std::string GroupSubset::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const auto n = group_.order();
    std::string s((n + 3) / 4, '0');
    for (std::size_t j = 0; j < s.size(); ++j) {
        const auto v = (words_[(j * 4) >> 6] >> ((j * 4) & 63)) & 0xF;
        s[j] = digits[v];
    }
    return s;
}

bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.group_ == b.group_ && std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                              b.words_.end());
}

std::strong_ordering rank_compare(const GroupSubset& a, const GroupSubset& b) {
    a.require_same_group(b);
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
}

std::size_t SubsetHash::operator()(const GroupSubset& s) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : s.words()) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

GroupSubset parse_subset(const GroupSpec& g, std::string_view text) {
    GroupSubset s(g);
    std::size_t start = 0;
    int depth = 0;
    auto flush = [&](std::size_t end) {
        auto tok = text.substr(start, end - start);
        const bool blank = std::all_of(tok.begin(), tok.end(),
                                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (blank) {
            throw std::invalid_argument("empty element in set literal '" + std::string(text) + "'");
        }
        s.insert(parse_element(g, tok));
    };
    const bool all_blank = std::all_of(text.begin(), text.end(),
                                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (all_blank) return s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(text.size());
    return s;
}

std::string format_subset(const GroupSubset& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Element e) {
        if (!first) out += ',';
        first = false;
        out += format_element(s.group(), e);
    });
    return out + "}";
}

GroupSubset negate(const GroupSubset& s) {
    GroupSubset out(s.group());
    s.for_each([&](Element e) { out.insert(s.group().neg(e)); });
    return out;
}

bool is_symmetric(const GroupSubset& s) { return negate(s) == s; }

bool is_asymmetric(const GroupSubset& s) { return !negate(s).intersects(s); }

}  // namespace subsums
