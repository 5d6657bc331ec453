#include "parind/expr.hpp"

#include <algorithm>
#include <cctype>

namespace parind {

namespace {

// Hand-rolled scanner/parser; positions are byte offsets into the input.
class Parser {
public:
    Parser(std::string_view input, const Universe& u) : in_(input), u_(u) {}

    Expression parse() {
        Expression e;
        skip_ws();
        if (eof())
            throw SyntaxError(pos_, "empty expression");
        while (true) {
            parse_factor(e);
            skip_ws();
            if (eof())
                break;
            expect_separator();
        }
        return e;
    }

    std::vector<CuspidalPoint> parse_point_list() {
        std::vector<CuspidalPoint> points;
        skip_ws();
        if (eof())
            return points;
        while (true) {
            std::size_t at = pos_;
            std::string id = parse_identifier();
            expect('^');
            Rat x = parse_rat();
            points.push_back({resolve(id, at), x});
            skip_ws();
            if (eof())
                break;
            expect(',');
        }
        return points;
    }

private:
    bool eof() const { return pos_ >= in_.size(); }
    char peek() const { return in_[pos_]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c)
            throw SyntaxError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect_separator() {
        // the bare word "x" between factors
        if (peek() != 'x')
            throw SyntaxError(pos_, "expected factor separator 'x'");
        ++pos_;
        if (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            throw SyntaxError(pos_ - 1, "expected factor separator 'x'");
        skip_ws();
        if (eof())
            throw SyntaxError(pos_, "dangling factor separator");
    }

    std::string parse_identifier() {
        skip_ws();
        std::size_t start = pos_;
        if (eof() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            throw SyntaxError(pos_, "expected a symbol id");
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        return std::string(in_.substr(start, pos_ - start));
    }

    SymbolId resolve(const std::string& id, std::size_t at) {
        if (!u_.has(id))
            throw LookupError("unknown symbol id '" + id + "' (at position " +
                              std::to_string(at) + ")");
        return u_.find(id);
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (!eof() && (peek() == '-' || peek() == '+'))
            ++pos_;
        std::size_t digits = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == digits)
            throw SyntaxError(start, "expected an integer");
        return std::stoll(std::string(in_.substr(start, pos_ - start)));
    }

    Rat parse_rat() {
        std::size_t start = pos_;
        long long num = parse_int();
        if (!eof() && peek() == '/') {
            ++pos_;
            long long den = parse_int();
            if (den == 0)
                throw SyntaxError(start, "malformed rational: zero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }

    void parse_factor(Expression& e) {
        skip_ws();
        if (eof())
            throw SyntaxError(pos_, "expected a factor");
        if (e.tempered)
            throw SyntaxError(pos_, "tempered factor must be the final factor");
        if (peek() == '<') {
            parse_segment(e);
            return;
        }
        std::size_t at = pos_;
        std::string word = parse_identifier();
        if (word == "St") {
            parse_steinberg(e);
        } else if (word == "pi") {
            parse_tempered(e);
        } else {
            throw SyntaxError(at, "expected a segment, St(...) or pi{...} factor");
        }
    }

    void parse_segment(Expression& e) {
        std::size_t at = pos_;
        expect('<');
        Rat endpoint_e = parse_rat();
        expect(',');
        Rat endpoint_f = parse_rat();
        expect('>');
        expect('_');
        std::size_t id_at = pos_;
        std::string id = parse_identifier();
        SymbolId rho = resolve(id, id_at);
        try {
            e.factors.emplace_back(rho, endpoint_e, endpoint_f);
        } catch (const DomainError& err) {
            throw DomainError(std::string(err.what()) + " (at position " + std::to_string(at) +
                              ")");
        }
    }

    void parse_steinberg(Expression& e) {
        expect('(');
        std::size_t id_at = pos_;
        std::string id = parse_identifier();
        expect(',');
        std::size_t a_at = pos_;
        long long a = parse_int();
        expect(')');
        if (a < 1)
            throw DomainError("Steinberg length must be >= 1 (at position " +
                              std::to_string(a_at) + ")");
        Rat b(0);
        skip_ws();
        if (!eof() && peek() == '|') {
            ++pos_;
            b = parse_rat();
        }
        SymbolId rho = resolve(id, id_at);
        e.factors.emplace_back(rho, Rat(a - 1, 2) + b, Rat(1 - a, 2) + b);
    }

    void parse_tempered(Expression& e) {
        expect('{');
        BlockMultiset blocks;
        skip_ws();
        if (!eof() && peek() == '}') {
            ++pos_;
            e.tempered = std::move(blocks);
            return;
        }
        while (true) {
            expect('(');
            std::size_t id_at = pos_;
            std::string id = parse_identifier();
            expect(',');
            std::size_t a_at = pos_;
            long long a = parse_int();
            expect(')');
            if (a < 1)
                throw DomainError("Jordan block length must be >= 1 (at position " +
                                  std::to_string(a_at) + ")");
            blocks[{resolve(id, id_at), static_cast<int>(a)}] += 1;
            skip_ws();
            if (!eof() && peek() == ',') {
                ++pos_;
                continue;
            }
            expect('}');
            break;
        }
        e.tempered = std::move(blocks);
    }

    std::string_view in_;
    const Universe& u_;
    std::size_t pos_ = 0;
};

} // namespace

Expression parse_expression(std::string_view input, const Universe& u) {
    return Parser(input, u).parse();
}

std::vector<CuspidalPoint> parse_points(std::string_view input, const Universe& u) {
    return Parser(input, u).parse_point_list();
}

std::string format_segment(const Segment& s, const Universe& u) {
    return "<" + to_string(s.e()) + "," + to_string(s.f()) + ">_" + u.name(s.rho());
}

std::string format_expression(const Expression& e, const Universe& u) {
    std::string out;
    for (const Segment& s : e.factors) {
        if (!out.empty())
            out += " x ";
        out += format_segment(s, u);
    }
    if (e.tempered) {
        if (!out.empty())
            out += " x ";
        out += "pi{";
        // emitted sorted by (id, a); multiplicities repeat the block
        std::vector<std::pair<JordanBlock, int>> blocks(e.tempered->begin(), e.tempered->end());
        std::sort(blocks.begin(), blocks.end(), [&](const auto& x, const auto& y) {
            if (u.name(x.first.rho) != u.name(y.first.rho))
                return u.name(x.first.rho) < u.name(y.first.rho);
            return x.first.a < y.first.a;
        });
        bool first = true;
        for (const auto& [block, mult] : blocks)
            for (int c = 0; c < mult; ++c) {
                if (!first)
                    out += ',';
                first = false;
                out += "(" + u.name(block.rho) + "," + std::to_string(block.a) + ")";
            }
        out += "}";
    }
    return out;
}

} // namespace parind
