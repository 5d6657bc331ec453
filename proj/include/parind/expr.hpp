// Expression DSL mirroring the induced-product notation: a sequence of
// twisted-segment factors, optionally closed by one tempered factor.
//
// Grammar:
//   expr      := factor { "x" factor }
//   factor    := segment | steinberg | tempered
//   segment   := "<" rat "," rat ">_" id
//   steinberg := "St(" id "," int ")" [ "|" rat ]
//   tempered  := "pi{" block { "," block } "}"
//   block     := "(" id "," int ")"
//   rat       := int | int "/" int
//
// Steinberg factors are sugar and normalize to segments with
// e = (a-1)/2 + b, f = -(a-1)/2 + b. The tempered factor must come last.
#pragma once

#include "parind/jordan.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parind {

struct Expression {
    std::vector<Segment> factors;
    std::optional<BlockMultiset> tempered; // blocks only; group context is external

    bool operator==(const Expression&) const = default;
};

Expression parse_expression(std::string_view input, const Universe& u);

// Canonical text; parse(format(e)) equals e structurally.
std::string format_expression(const Expression& e, const Universe& u);

std::string format_segment(const Segment& s, const Universe& u);

// Comma-separated cuspidal points "id^rat"; empty input means the empty
// sequence.
std::vector<CuspidalPoint> parse_points(std::string_view input, const Universe& u);

} // namespace parind
