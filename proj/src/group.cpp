#include "subsums/group.hpp"

#include "subsums/shift_table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace subsums {

struct GroupSpec::Impl {
    std::vector<std::uint32_t> factors;
    std::vector<std::uint32_t> strides;
    std::uint32_t order = 1;
    mutable std::once_flag shift_once;
    mutable std::unique_ptr<ShiftTable> shift;
};

GroupSpec::GroupSpec(std::vector<std::uint32_t> factors, std::uint64_t max_order) {
    if (factors.empty()) {
        throw std::invalid_argument("group needs at least one cyclic factor");
    }
    std::uint64_t order = 1;
    for (auto d : factors) {
        if (d < 1) {
            throw std::invalid_argument("cyclic factor orders must be >= 1");
        }
        order *= d;
        if (order > max_order) {
            throw std::length_error("group order exceeds the configured maximum of " +
                                    std::to_string(max_order));
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->factors = std::move(factors);
    impl->order = static_cast<std::uint32_t>(order);
    impl->strides.assign(impl->factors.size(), 1);
    for (std::size_t i = impl->factors.size() - 1; i-- > 0;) {
        impl->strides[i] = impl->strides[i + 1] * impl->factors[i + 1];
    }
    impl_ = std::move(impl);
}

std::span<const std::uint32_t> GroupSpec::factors() const { return impl_->factors; }
std::span<const std::uint32_t> GroupSpec::strides() const { return impl_->strides; }
std::uint32_t GroupSpec::order() const { return impl_->order; }
std::size_t GroupSpec::word_count() const { return (impl_->order + 63) / 64; }
std::uint32_t GroupSpec::row_length() const { return impl_->factors.back(); }
std::uint32_t GroupSpec::row_count() const { return impl_->order / impl_->factors.back(); }

std::vector<std::uint32_t> GroupSpec::canonical_form() const {
    return invariant_factors(impl_->factors);
}

void GroupSpec::check_element(Element a) const {
    if (a >= impl_->order) {
        throw std::out_of_range("element index " + std::to_string(a) +
                                " out of range for group of order " +
                                std::to_string(impl_->order));
    }
}

std::vector<std::uint32_t> GroupSpec::coordinates(Element e) const {
    check_element(e);
    std::vector<std::uint32_t> c(impl_->factors.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = (e / impl_->strides[i]) % impl_->factors[i];
    }
    return c;
}

Element GroupSpec::from_coordinates(std::span<const std::int64_t> coords) const {
    if (coords.size() != impl_->factors.size()) {
        throw std::invalid_argument("coordinate count does not match the number of factors");
    }
    Element e = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const std::int64_t d = impl_->factors[i];
        if (coords[i] < 0 || coords[i] >= d) {
            throw std::out_of_range("coordinate " + std::to_string(coords[i]) +
                                    " out of range for factor Z" + std::to_string(d));
        }
        e += static_cast<Element>(coords[i]) * impl_->strides[i];
    }
    return e;
}

Element GroupSpec::add(Element a, Element b) const {
    check_element(a);
    check_element(b);
    const auto& f = impl_->factors;
    if (f.size() == 1) {
        return static_cast<Element>((std::uint64_t{a} + b) % impl_->order);
    }
    Element r = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto s = impl_->strides[i];
        const auto ca = (a / s) % f[i];
        const auto cb = (b / s) % f[i];
        r += ((ca + cb) % f[i]) * s;
    }
    return r;
}

Element GroupSpec::neg(Element a) const {
    check_element(a);
    const auto& f = impl_->factors;
    Element r = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto s = impl_->strides[i];
        const auto c = (a / s) % f[i];
        r += ((f[i] - c) % f[i]) * s;
    }
    return r;
}

Element GroupSpec::multiple(Element a, std::uint64_t n) const {
    check_element(a);
    const auto& f = impl_->factors;
    Element r = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto s = impl_->strides[i];
        const std::uint64_t c = (a / s) % f[i];
        r += static_cast<Element>((c * (n % f[i])) % f[i]) * s;
    }
    return r;
}

std::uint32_t GroupSpec::element_order(Element a) const {
    check_element(a);
    const auto& f = impl_->factors;
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::uint64_t c = (a / impl_->strides[i]) % f[i];
        const std::uint64_t oi = f[i] / std::gcd<std::uint64_t>(c, f[i]);
        ord = std::lcm(ord, oi);
    }
    return static_cast<std::uint32_t>(ord);
}

std::string GroupSpec::to_string() const { return format_factors(impl_->factors); }

const ShiftTable& GroupSpec::shift_table() const {
    std::call_once(impl_->shift_once,
                   [this] { impl_->shift = std::make_unique<ShiftTable>(impl_->factors); });
    return *impl_->shift;
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.impl_ == b.impl_ || a.impl_->factors == b.impl_->factors;
}

GroupSpec make_group(std::vector<std::uint32_t> factors, std::uint64_t max_order) {
    return GroupSpec(std::move(factors), max_order);
}

std::string format_factors(std::span<const std::uint32_t> factors) {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += 'x';
        s += 'Z';
        s += std::to_string(factors[i]);
    }
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
    s = trim(s);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
        throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

GroupSpec parse_group(std::string_view text, std::uint64_t max_order) {
    std::vector<std::uint32_t> factors;
    std::string lowered;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    if (lowered.empty()) {
        throw std::invalid_argument("empty group spec");
    }
    std::string_view rest = lowered;
    while (true) {
        if (rest.empty() || rest.front() != 'z') {
            throw std::invalid_argument("malformed group spec '" + std::string(text) +
                                        "' (expected terms like Z4xZ2)");
        }
        rest.remove_prefix(1);
        const auto sep = rest.find('x');
        const auto term = rest.substr(0, sep);
        const auto d = parse_int(term, "cyclic factor");
        if (d < 1 || d > static_cast<std::int64_t>(max_order)) {
            throw std::invalid_argument("cyclic factor out of range in '" + std::string(text) + "'");
        }
        factors.push_back(static_cast<std::uint32_t>(d));
        if (sep == std::string_view::npos) break;
        rest.remove_prefix(sep + 1);
    }
    return GroupSpec(std::move(factors), max_order);
}

Element parse_element(const GroupSpec& g, std::string_view text) {
    text = trim(text);
    bool negate = false;
    if (!text.empty() && text.front() == '-') {
        negate = true;
        text = trim(text.substr(1));
    }
    Element e = 0;
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') {
            throw std::invalid_argument("unterminated coordinate tuple '" + std::string(text) + "'");
        }
        auto inner = text.substr(1, text.size() - 2);
        std::vector<std::int64_t> coords;
        while (true) {
            const auto comma = inner.find(',');
            coords.push_back(parse_int(inner.substr(0, comma), "coordinate"));
            if (comma == std::string_view::npos) break;
            inner.remove_prefix(comma + 1);
        }
        e = g.from_coordinates(coords);
    } else {
        const auto v = parse_int(text, "element");
        if (v < 0 || v >= g.order()) {
            throw std::out_of_range("element " + std::to_string(v) +
                                    " out of range for group of order " +
                                    std::to_string(g.order()));
        }
        e = static_cast<Element>(v);
    }
    return negate ? g.neg(e) : e;
}

std::string format_element(const GroupSpec& g, Element e) {
    if (g.factors().size() == 1) {
        return std::to_string(e);
    }
    const auto c = g.coordinates(e);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s + ")";
}

namespace {

std::map<std::uint32_t, std::uint32_t> factorize(std::uint32_t n) {
    std::map<std::uint32_t, std::uint32_t> out;
    for (std::uint32_t p = 2; std::uint64_t{p} * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
    std::uint32_t r = 1;
    while (e--) r *= b;
    return r;
}

// Partitions of n into non-increasing parts.
void partitions(std::uint32_t n, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                std::vector<std::vector<std::uint32_t>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

// Combine per-prime exponent lists (each sorted descending) into invariant
// factors sorted ascending by divisibility.
std::vector<std::uint32_t> combine(
    const std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>& per_prime) {
    std::size_t len = 0;
    for (const auto& [p, ex] : per_prime) len = std::max(len, ex.size());
    if (len == 0) return {1};
    // largest factor first, then reverse
    std::vector<std::uint32_t> desc(len, 1);
    for (const auto& [p, ex] : per_prime) {
        for (std::size_t i = 0; i < ex.size(); ++i) desc[i] *= ipow(p, ex[i]);
    }
    std::reverse(desc.begin(), desc.end());
    return desc;
}

}  // namespace

std::vector<std::uint32_t> invariant_factors(std::span<const std::uint32_t> factors) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> exps;
    for (auto d : factors) {
        for (auto [p, e] : factorize(d)) exps[p].push_back(e);
    }
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> per_prime;
    for (auto& [p, ex] : exps) {
        std::sort(ex.begin(), ex.end(), std::greater<>());
        per_prime.emplace_back(p, ex);
    }
    return combine(per_prime);
}

std::vector<std::vector<std::uint32_t>> abelian_groups_of_order(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("group order must be >= 1");
    const auto primes = factorize(n);
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> chosen;
    std::vector<std::pair<std::uint32_t, std::vector<std::vector<std::uint32_t>>>> options;
    for (auto [p, e] : primes) {
        std::vector<std::vector<std::uint32_t>> parts;
        std::vector<std::uint32_t> cur;
        partitions(e, e, cur, parts);
        options.emplace_back(p, std::move(parts));
    }
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == options.size()) {
            out.push_back(combine(chosen));
            return;
        }
        for (const auto& part : options[i].second) {
            chosen.emplace_back(options[i].first, part);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::uint32_t>> abelian_groups_up_to(std::uint32_t max_order) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t n = 1; n <= max_order; ++n) {
        auto gs = abelian_groups_of_order(n);
        out.insert(out.end(), gs.begin(), gs.end());
    }
    return out;
}

}  // namespace subsums
