#include "parind/rational.hpp"

#include <cctype>
#include <charconv>

namespace parind {

std::string to_string(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        s += '/';
        s += std::to_string(r.denominator());
    }
    return s;
}

namespace {

std::optional<long long> parse_int(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (*first == '+')
        ++first; // from_chars does not accept a leading '+'
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        return std::nullopt;
    return value;
}

} // namespace

std::optional<Rat> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n)
            return std::nullopt;
        return Rat(*n);
    }
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0)
        return std::nullopt;
    return Rat(*num, *den);
}

} // namespace parind
