#include "subsums/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace subsums {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t v = 0;
    const auto* end = text.data() + text.size();
    auto [p, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || p != end) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

std::string format_rational(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash), text), den);
}

}  // namespace subsums
