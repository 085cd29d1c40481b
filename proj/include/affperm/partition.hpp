#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace affperm {

// A box (row, col) of a Young diagram, both 1-based, rows growing downwards.
struct Node {
    Int row = 1;
    Int col = 1;

    friend auto operator<=>(const Node&, const Node&) = default;
};

// An integer partition paired with an integer charge. Only nonzero parts
// are stored; part(k) is 0 beyond the last one.
class ChargedPartition {
public:
    ChargedPartition() = default;

    explicit ChargedPartition(std::vector<Int> parts, Int charge = 0)
        : parts_(std::move(parts)), charge_(charge) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1)
                throw DomainError("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw DomainError("partition parts must be weakly decreasing");
        }
    }

    static ChargedPartition empty(Int charge) { return ChargedPartition({}, charge); }

    const std::vector<Int>& parts() const noexcept { return parts_; }
    Int charge() const noexcept { return charge_; }
    std::size_t num_parts() const noexcept { return parts_.size(); }
    bool is_empty() const noexcept { return parts_.empty(); }

    // 1-based row length, 0 past the end.
    Int part(Int row) const noexcept {
        return (row >= 1 && static_cast<std::size_t>(row) <= parts_.size())
                   ? parts_[static_cast<std::size_t>(row - 1)]
                   : 0;
    }

    Int size() const noexcept {
        Int n = 0;
        for (Int p : parts_) n += p;
        return n;
    }

    bool contains(Node n) const noexcept {
        return n.row >= 1 && n.col >= 1 && n.col <= part(n.row);
    }

    ChargedPartition with_charge(Int c) const { return ChargedPartition(parts_, c); }

    friend bool operator==(const ChargedPartition&, const ChargedPartition&) = default;

private:
    std::vector<Int> parts_;
    Int charge_ = 0;
};

inline std::vector<Node> young_diagram(const ChargedPartition& p) {
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(p.size()));
    for (Int a = 1; a <= static_cast<Int>(p.num_parts()); ++a)
        for (Int b = 1; b <= p.part(a); ++b) nodes.push_back({a, b});
    return nodes;
}

inline Int residue(const ChargedPartition& p, Node n, int e) {
    check_modulus(e);
    return mod(n.col - n.row + p.charge(), e);
}

// Y(p) ⊆ Y(q); charges are ignored.
inline bool diagram_contains(const ChargedPartition& p, const ChargedPartition& q) noexcept {
    if (p.num_parts() > q.num_parts()) return false;
    for (std::size_t k = 0; k < p.num_parts(); ++k)
        if (p.parts()[k] > q.parts()[k]) return false;
    return true;
}

inline ChargedPartition remove_first_column(const ChargedPartition& p) {
    std::vector<Int> parts;
    for (Int x : p.parts())
        if (x > 1) parts.push_back(x - 1);
    return ChargedPartition(std::move(parts), p.charge() + 1);
}

// "(4,3,2,1,1,1)", "()" for the empty partition.
inline std::string to_string(const ChargedPartition& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.num_parts(); ++k) {
        if (k) s += ',';
        s += std::to_string(p.parts()[k]);
    }
    return s + ")";
}

namespace detail {

inline void skip_ws(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

inline Int parse_int(std::string_view text, std::size_t& pos) {
    skip_ws(text, pos);
    std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t digits = pos;
    Int value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        ++pos;
    }
    if (pos == digits) throw ParseError(start, "expected an integer");
    return negative ? -value : value;
}

// Parses "<open> int, int, ... <close>" with optional whitespace.
inline std::vector<Int> parse_int_list(std::string_view text, char open, char close) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != open)
        throw ParseError(pos, std::string("expected '") + open + "'");
    ++pos;
    std::vector<Int> values;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == close) {
        ++pos;
    } else {
        for (;;) {
            values.push_back(parse_int(text, pos));
            skip_ws(text, pos);
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == close) {
                ++pos;
                break;
            }
            throw ParseError(pos, std::string("expected ',' or '") + close + "'");
        }
    }
    skip_ws(text, pos);
    if (pos != text.size()) throw ParseError(pos, "trailing characters");
    return values;
}

} // namespace detail

inline ChargedPartition parse_partition(std::string_view text, Int charge = 0) {
    auto parts = detail::parse_int_list(text, '(', ')');
    try {
        return ChargedPartition(std::move(parts), charge);
    } catch (const DomainError& err) {
        throw ParseError(0, err.what());
    }
}

} // namespace affperm
