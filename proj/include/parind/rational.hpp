// Exact rational endpoints and exponents. All arithmetic in the engine is
// exact; nothing here may ever pass through a floating point value.
#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace parind {

using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

// True when 2r is an integer (the paper-style "demi-entier", integers included).
inline bool is_half_integer(const Rat& r) { return (2 * r).denominator() == 1; }

// Numerator of 2r; only valid when is_half_integer(r).
inline long long twice(const Rat& r) { return (2 * r).numerator(); }

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

std::string to_string(const Rat& r);

// Accepts "p" or "p/q" with optional leading sign; nullopt on malformed input.
std::optional<Rat> parse_rational(std::string_view text);

} // namespace parind
