#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quotring/integers.hpp"
#include "quotring/matrix.hpp"
#include "quotring/poly_fp.hpp"

namespace quotring {

// ---------------------------------------------------------------------------
// Element text forms. Integers print as decimal strings; polynomials print
// as ascending coefficient arrays like "[1,0,2]" (zero polynomial: "[]").
// Every printed form re-parses to an equal value.
// ---------------------------------------------------------------------------

template <euclidean_domain R>
std::string to_text(const R& r, const typename R::Elem& a) {
    return r.text(a);
}

/// Human-oriented polynomial rendering, e.g. "x^2+2x+1"; not meant to be
/// parsed back.
inline std::string pretty(const FpPolyRing&, const FpPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) {
        std::uint32_t c = a.coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 'x';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string pretty(const IntegerRing& r, const BigInt& a) { return to_text(r, a); }

namespace detail {

/// Minimal nested-list syntax: signed decimal integers and comma-separated
/// bracketed lists, arbitrary nesting, whitespace insensitive.
struct TextNode {
    bool is_list = false;
    std::string number;           // valid when !is_list
    std::vector<TextNode> items;  // valid when is_list
};

class NodeParser {
public:
    explicit NodeParser(std::string_view s) : s_(s) {}

    TextNode parse() {
        TextNode n = node();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing characters after value");
        return n;
    }

private:
    TextNode node() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input");
        if (s_[pos_] == '[') return list();
        return number();
    }

    TextNode list() {
        TextNode n;
        n.is_list = true;
        ++pos_;  // '['
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ']') {
            ++pos_;
            return n;
        }
        while (true) {
            n.items.push_back(node());
            skip_ws();
            if (pos_ >= s_.size()) throw ParseError("unterminated list");
            if (s_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (s_[pos_] == ']') {
                ++pos_;
                return n;
            }
            throw ParseError("expected ',' or ']' in list");
        }
    }

    TextNode number() {
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected an integer");
        TextNode n;
        n.number = std::string(s_.substr(start, pos_ - start));
        return n;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline BigInt node_to_bigint(const TextNode& n) {
    if (n.is_list) throw ParseError("expected an integer, found a list");
    try {
        return BigInt(n.number);
    } catch (const std::exception&) {
        throw ParseError("bad integer literal: " + n.number);
    }
}

inline BigInt elem_from_node(const IntegerRing&, const TextNode& n) {
    return node_to_bigint(n);
}

inline FpPoly elem_from_node(const FpPolyRing& r, const TextNode& n) {
    if (!n.is_list) {
        // bare integers are accepted as constants
        BigInt v = node_to_bigint(n);
        BigInt red = v % r.characteristic();
        if (red < 0) red += r.characteristic();
        return r.constant(red.convert_to<std::uint64_t>());
    }
    std::vector<std::int64_t> cs;
    cs.reserve(n.items.size());
    for (const TextNode& item : n.items) {
        BigInt v = node_to_bigint(item);
        BigInt red = v % r.characteristic();
        if (red < 0) red += r.characteristic();
        cs.push_back(red.convert_to<std::int64_t>());
    }
    return r.from_coeffs(cs);
}

}  // namespace detail

template <euclidean_domain R>
typename R::Elem parse_elem(const R& r, std::string_view text) {
    return detail::elem_from_node(r, detail::NodeParser(text).parse());
}

/// Parses a list of elements. For integers both "4,8,24" and "[4,8,24]" are
/// accepted; polynomial lists must be bracketed per element, e.g.
/// "[[0,1],[0,0,1]]".
template <euclidean_domain R>
std::vector<typename R::Elem> parse_elem_list(const R& r, std::string_view text) {
    std::string wrapped;
    std::string_view body = text;
    std::size_t first = body.find_first_not_of(" \t");
    if (first == std::string_view::npos || body[first] != '[') {
        wrapped = "[" + std::string(text) + "]";
        body = wrapped;
    }
    detail::TextNode n = detail::NodeParser(body).parse();
    if (!n.is_list) throw ParseError("expected a list of elements");
    std::vector<typename R::Elem> out;
    out.reserve(n.items.size());
    for (const detail::TextNode& item : n.items)
        out.push_back(detail::elem_from_node(r, item));
    return out;
}

/// Parses a square matrix given as nested rows, e.g. "[[1,0],[2,1]]".
template <euclidean_domain R>
std::vector<std::vector<typename R::Elem>> parse_matrix_rows(const R& r,
                                                             std::string_view text) {
    detail::TextNode n = detail::NodeParser(text).parse();
    if (!n.is_list || n.items.empty()) throw ParseError("expected a matrix");
    std::vector<std::vector<typename R::Elem>> rows;
    rows.reserve(n.items.size());
    for (const detail::TextNode& row : n.items) {
        if (!row.is_list) throw ParseError("matrix rows must be lists");
        std::vector<typename R::Elem> out;
        out.reserve(row.items.size());
        for (const detail::TextNode& item : row.items)
            out.push_back(detail::elem_from_node(r, item));
        rows.push_back(std::move(out));
    }
    return rows;
}

template <euclidean_domain R>
std::string matrix_to_text(const DomainMatrix<R>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out += ',';
            out += to_text(m.ring(), m.at(i, j));
        }
        out += ']';
    }
    out += ']';
    return out;
}

template <euclidean_domain R>
std::string matrix_to_text(const ResidueMatrix<R>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out += ',';
            out += to_text(m.modulus().ring(), m.rep_at(i, j));
        }
        out += ']';
    }
    out += ']';
    return out;
}

}  // namespace quotring
