#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "ritt/errors.hpp"
#include "ritt/representation.hpp"

namespace ritt {

// ---------------------------------------------------------------------------
// Printing. Canonical form: terms in descending monomial order, explicit *
// between factors, ^ for exponents > 1, rationals as a/b.
// ---------------------------------------------------------------------------

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Rational& c = it->second;
        const Monomial& m = it->first;
        const bool negative = c < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        Rational a = negative ? Rational(-c) : c;
        bool monomial_empty = true;
        for (unsigned e : m)
            if (e) monomial_empty = false;
        bool coef_printed = false;
        if (monomial_empty || a != 1) {
            os << to_string(a);
            coef_printed = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (coef_printed) os << '*';
            os << p.order()->name(i);
            if (m[i] > 1) os << '^' << m[i];
            coef_printed = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Expression parsing. Grammar (whitespace separates tokens, * optional):
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { ['*'] factor }
//   factor := number | variable ['^' integer]
//   number := digits [ '/' digits ]
// Juxtaposed letters form one variable name: products of variables need
// '*' or whitespace.
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
    enum Kind { number, ident, plus, minus, star, caret, end } kind;
    std::string text;
    std::size_t column;
};

inline std::vector<Token> lex_expression(const std::string& s, std::size_t line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t col = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '/') {
                std::size_t k = j + 1;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == j + 1) throw parse_error("expected digits after '/'", line, j + 2);
                j = k;
            }
            out.push_back({Token::number, s.substr(i, j - i), col});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::ident, s.substr(i, j - i), col});
            i = j;
        } else if (c == '+') { out.push_back({Token::plus, "+", col}); ++i; }
        else if (c == '-')   { out.push_back({Token::minus, "-", col}); ++i; }
        else if (c == '*')   { out.push_back({Token::star, "*", col}); ++i; }
        else if (c == '^')   { out.push_back({Token::caret, "^", col}); ++i; }
        else throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({Token::end, "", s.size() + 1});
    return out;
}

} // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const OrderHandle& order,
                                   std::size_t line = 0) {
    using detail::Token;
    auto tokens = detail::lex_expression(text, line);
    std::size_t pos = 0;
    auto peek = [&]() -> const Token& { return tokens[pos]; };
    auto advance = [&]() -> const Token& { return tokens[pos++]; };

    auto parse_number = [&](const Token& t) -> Rational {
        auto slash = t.text.find('/');
        if (slash == std::string::npos) return Rational(Integer(t.text));
        Integer den(t.text.substr(slash + 1));
        if (den.is_zero()) throw parse_error("zero denominator", line, t.column);
        return Rational(Integer(t.text.substr(0, slash)), den);
    };

    Polynomial result(order);
    bool expect_term = true;
    Rational sign(1);
    while (peek().kind != Token::end) {
        if (!expect_term) {
            const Token& t = advance();
            if (t.kind == Token::plus) sign = 1;
            else if (t.kind == Token::minus) sign = -1;
            else throw parse_error("expected '+' or '-' between terms", line, t.column);
            expect_term = true;
            continue;
        }
        // Leading sign of the first term.
        while (peek().kind == Token::plus || peek().kind == Token::minus) {
            if (advance().kind == Token::minus) sign = -sign;
        }
        Rational coef = sign;
        Monomial mono(order->size(), 0u);
        bool any_factor = false;
        bool after_star = false;
        while (true) {
            const Token& t = peek();
            if (t.kind == Token::number) {
                advance();
                coef *= parse_number(t);
                any_factor = true;
                after_star = false;
            } else if (t.kind == Token::ident) {
                advance();
                if (!order->contains(t.text))
                    throw parse_error("unknown variable '" + t.text + "'", line, t.column);
                unsigned e = 1;
                if (peek().kind == Token::caret) {
                    advance();
                    const Token& et = peek();
                    if (et.kind != Token::number || et.text.find('/') != std::string::npos)
                        throw parse_error("expected integer exponent after '^'", line, et.column);
                    advance();
                    unsigned long v = std::stoul(et.text);
                    e = static_cast<unsigned>(v);
                }
                mono[order->index_of(t.text)] += e;
                any_factor = true;
                after_star = false;
            } else if (t.kind == Token::star) {
                advance();
                after_star = true;
            } else {
                break;
            }
        }
        if (!any_factor)
            throw parse_error("empty term", line, peek().column);
        if (after_star)
            throw parse_error("dangling '*'", line, peek().column);
        result = result + Polynomial::term(order, std::move(mono), coef);
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw parse_error("empty polynomial expression", line);
    return result;
}

// ---------------------------------------------------------------------------
// File formats. A system file:
//     vars: x,y,z          (ascending order)
//     # comment
//     x^2 - 1              (one polynomial per line)
//     != x + 1             (inequation)
// A representation file uses the same header, with components separated by
// lines containing only '---'; a component whose sole line is '1' denotes
// the unit representation (empty zero set). No components denotes the
// radical of the zero ideal.
// ---------------------------------------------------------------------------

struct PolynomialSystem {
    OrderHandle order;
    std::vector<Polynomial> equations;
    std::vector<Polynomial> inequations;
};

namespace detail {

inline std::string strip_line(const std::string& raw) {
    std::string s = raw;
    if (auto hash = s.find('#'); hash != std::string::npos) s = s.substr(0, hash);
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline OrderHandle parse_vars_header(const std::string& content, std::size_t line_no) {
    const std::string prefix = "vars:";
    if (content.rfind(prefix, 0) != 0)
        throw parse_error("expected 'vars:' header line", line_no);
    std::vector<std::string> names;
    std::string rest = content.substr(prefix.size());
    std::size_t start = 0;
    while (start <= rest.size()) {
        std::size_t comma = rest.find(',', start);
        std::string piece = comma == std::string::npos ? rest.substr(start)
                                                       : rest.substr(start, comma - start);
        std::string name = strip_line(piece);
        if (!name.empty()) names.push_back(name);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (names.empty()) throw parse_error("empty variable list", line_no);
    return make_order(std::move(names));
}

} // namespace detail

inline PolynomialSystem parse_system(const std::string& text) {
    PolynomialSystem sys;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string content = detail::strip_line(raw);
        if (content.empty()) continue;
        if (!sys.order) {
            sys.order = detail::parse_vars_header(content, line_no);
            continue;
        }
        if (content.rfind("!=", 0) == 0)
            sys.inequations.push_back(parse_polynomial(content.substr(2), sys.order, line_no));
        else
            sys.equations.push_back(parse_polynomial(content, sys.order, line_no));
    }
    if (!sys.order) throw parse_error("missing 'vars:' header");
    return sys;
}

inline std::string format_vars_header(const OrderHandle& order) {
    std::string s = "vars: ";
    for (std::size_t i = 0; i < order->size(); ++i) {
        if (i) s += ',';
        s += order->name(i);
    }
    return s;
}

inline std::string to_string(const TriangularRepresentation& rep) {
    std::ostringstream os;
    os << format_vars_header(rep.order()) << '\n';
    if (rep.is_unit()) {
        os << "1\n";
        return os.str();
    }
    bool first = true;
    for (const auto& c : rep.components()) {
        if (!first) os << "---\n";
        first = false;
        for (const auto& g : c.set.members()) os << to_string(g) << '\n';
        for (const auto& q : c.inequations) os << "!= " << to_string(q) << '\n';
    }
    return os.str();
}

inline TriangularRepresentation parse_representation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    OrderHandle order;
    std::vector<QuasiComponent> components;
    std::vector<Polynomial> members, ineqs;
    bool any_block_content = false;
    bool unit_marker = false;

    auto flush = [&]() {
        if (members.empty() && ineqs.empty()) return;
        components.emplace_back(TriangularSet(order, std::move(members)), std::move(ineqs));
        members.clear();
        ineqs.clear();
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string content = detail::strip_line(raw);
        if (content.empty()) continue;
        if (!order) {
            order = detail::parse_vars_header(content, line_no);
            continue;
        }
        if (content == "---") {
            flush();
            continue;
        }
        any_block_content = true;
        if (content == "1") {
            unit_marker = true;
            continue;
        }
        if (content.rfind("!=", 0) == 0)
            ineqs.push_back(parse_polynomial(content.substr(2), order, line_no));
        else
            members.push_back(parse_polynomial(content, order, line_no));
    }
    if (!order) throw parse_error("missing 'vars:' header");
    if (unit_marker) {
        if (!members.empty() || !ineqs.empty() || !components.empty())
            throw parse_error("unit marker '1' must be the only content");
        return TriangularRepresentation::unit(order);
    }
    flush();
    (void)any_block_content;
    return TriangularRepresentation(order, std::move(components));
}

inline std::string to_string(const PolynomialSystem& sys) {
    std::ostringstream os;
    os << format_vars_header(sys.order) << '\n';
    for (const auto& g : sys.equations) os << to_string(g) << '\n';
    for (const auto& q : sys.inequations) os << "!= " << to_string(q) << '\n';
    return os.str();
}

} // namespace ritt
