#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affine.hpp"
#include "cores.hpp"

namespace affperm {

enum class Relation { less, equal, greater, incomparable };

inline const char* to_string(Relation r) {
    switch (r) {
        case Relation::less: return "LESS";
        case Relation::equal: return "EQUAL";
        case Relation::greater: return "GREATER";
        case Relation::incomparable: return "INCOMPARABLE";
    }
    return "?";
}

// Diagram inclusion at one charge, in both directions.
struct ChargeInclusion {
    Int charge = 0;
    bool first_in_second = false;
    bool second_in_first = false;
};

struct ComparisonResult {
    Relation relation = Relation::equal;
    std::vector<ChargeInclusion> witness;
};

namespace detail {

inline Relation relation_from(bool le, bool ge) {
    if (le && ge) return Relation::equal;
    if (le) return Relation::less;
    if (ge) return Relation::greater;
    return Relation::incomparable;
}

} // namespace detail

// Componentwise diagram inclusion of two core tuples.
inline bool core_tuple_leq(const CoreTuple& a, const CoreTuple& b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
    for (std::size_t c = 0; c < a.cores().size(); ++c)
        if (!diagram_contains(a.cores()[c], b.cores()[c])) return false;
    return true;
}

inline ComparisonResult compare_core_tuples(const CoreTuple& a, const CoreTuple& b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus(), b.modulus());
    ComparisonResult out;
    bool le = true, ge = true;
    for (std::size_t c = 0; c < a.cores().size(); ++c) {
        ChargeInclusion inc{static_cast<Int>(c), diagram_contains(a.cores()[c], b.cores()[c]),
                            diagram_contains(b.cores()[c], a.cores()[c])};
        le = le && inc.first_in_second;
        ge = ge && inc.second_in_first;
        out.witness.push_back(inc);
    }
    out.relation = detail::relation_from(le, ge);
    return out;
}

/// Strong Bruhat comparison: w <= v iff Y(w·∅_c) ⊆ Y(v·∅_c) for every c.
inline ComparisonResult bruhat_compare(const AffinePermutation& w, const AffinePermutation& v) {
    if (w.modulus() != v.modulus()) throw ModulusMismatch(w.modulus(), v.modulus());
    return compare_core_tuples(core_tuple(w), core_tuple(v));
}

inline bool bruhat_leq(const AffinePermutation& w, const AffinePermutation& v) {
    return bruhat_compare(w, v).relation <= Relation::equal;
}

// Comparison of two Grassmannian elements at charge c through the single core.
inline ComparisonResult grassmannian_compare(const AffinePermutation& w, const AffinePermutation& v, Int c) {
    if (w.modulus() != v.modulus()) throw ModulusMismatch(w.modulus(), v.modulus());
    if (!is_grassmannian(w, c) || !is_grassmannian(v, c))
        throw DomainError("grassmannian_compare: input is not Grassmannian at charge " + std::to_string(c));
    const auto a = core_from_window(w, c);
    const auto b = core_from_window(v, c);
    ChargeInclusion inc{c, diagram_contains(a, b), diagram_contains(b, a)};
    return {detail::relation_from(inc.first_in_second, inc.second_in_first), {inc}};
}

struct OracleOptions {
    Int max_length = 14;
};

/// w <= v decided by the subword property: fix one reduced word of v and look
/// for a subword of length l(w) that evaluates to w. Exponential in l(v).
inline bool subword_oracle(const AffinePermutation& w, const AffinePermutation& v, OracleOptions opts = {}) {
    if (w.modulus() != v.modulus()) throw ModulusMismatch(w.modulus(), v.modulus());
    const Int lv = length(v);
    if (lv > opts.max_length)
        throw GuardExceeded("subword oracle: length " + std::to_string(lv) + " exceeds guard " +
                            std::to_string(opts.max_length));
    const Int lw = length(w);
    if (lw > lv) return false;
    const auto word = reduced_word(v).letters;
    const int e = v.modulus();
    const std::size_t n = word.size();
    const auto need = static_cast<std::size_t>(lw);

    // Depth-first over subwords, composing prefixes as we go.
    struct Frame {
        std::size_t next;
        std::size_t taken;
        AffinePermutation prefix;
    };
    std::vector<Frame> stack{{0, 0, AffinePermutation::identity(e)}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.taken == need) {
            if (f.prefix == w) return true;
            continue;
        }
        if (n - f.next < need - f.taken) continue;
        stack.push_back({f.next + 1, f.taken, f.prefix});
        stack.push_back({f.next + 1, f.taken + 1, times_generator(f.prefix, word[f.next])});
    }
    return false;
}

/// All elements of length at most `radius`, found by breadth-first search from
/// the identity under right multiplication by generators, together with the
/// cover relations of the Bruhat order among them.
///
/// Elements are sorted by (BFS depth, window); covers are pairs of indices
/// into `elements`, sorted.
struct PosetBall {
    int e = 2;
    Int radius = 0;
    std::vector<AffinePermutation> elements;
    std::vector<Int> depth;
    std::vector<CoreTuple> tuples;
    std::vector<std::pair<std::size_t, std::size_t>> covers;

    std::size_t size() const noexcept { return elements.size(); }
};

struct BallOptions {
    std::size_t max_elements = 200000;
};

inline PosetBall build_ball(int e, Int radius, BallOptions opts = {}) {
    check_modulus(e);
    if (radius < 0) throw DomainError("build_ball: negative radius");
    PosetBall ball;
    ball.e = e;
    ball.radius = radius;

    std::map<std::vector<Int>, Int> seen;
    std::vector<AffinePermutation> frontier{AffinePermutation::identity(e)};
    seen.emplace(frontier.front().window(), 0);
    std::vector<std::pair<Int, AffinePermutation>> found{{0, frontier.front()}};
    for (Int d = 1; d <= radius; ++d) {
        std::vector<AffinePermutation> next;
        for (const auto& w : frontier)
            for (int i = 0; i < e; ++i) {
                auto v = times_generator(w, i);
                if (seen.emplace(v.window(), d).second) {
                    found.emplace_back(d, v);
                    next.push_back(std::move(v));
                    if (found.size() > opts.max_elements)
                        throw GuardExceeded("build_ball: more than " + std::to_string(opts.max_elements) +
                                            " elements");
                }
            }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end());
    for (auto& [d, w] : found) {
        ball.depth.push_back(d);
        ball.tuples.push_back(core_tuple(w));
        ball.elements.push_back(std::move(w));
    }

    // Bruhat order is graded by length, so covers join adjacent levels only.
    for (std::size_t u = 0; u < ball.size(); ++u)
        for (std::size_t v = u + 1; v < ball.size(); ++v)
            if (ball.depth[v] == ball.depth[u] + 1 && core_tuple_leq(ball.tuples[u], ball.tuples[v]))
                ball.covers.emplace_back(u, v);
    return ball;
}

struct Discrepancy {
    AffinePermutation first;
    AffinePermutation second;
    bool fast = false;
    bool oracle = false;
};

struct LatticeReport {
    std::size_t pairs_checked = 0;
    bool injective = true;
    std::vector<Discrepancy> discrepancies;

    bool ok() const noexcept { return injective && discrepancies.empty(); }
};

/// Checks that w -> core tuple is injective on the ball and that diagram
/// inclusion agrees with the subword oracle on every ordered pair.
inline LatticeReport check_lattice_isomorphism(const PosetBall& ball, OracleOptions opts = {}) {
    LatticeReport report;
    {
        std::vector<std::vector<std::vector<Int>>> keys;
        for (const auto& t : ball.tuples) {
            std::vector<std::vector<Int>> k;
            for (const auto& p : t.cores()) k.push_back(p.parts());
            keys.push_back(std::move(k));
        }
        std::sort(keys.begin(), keys.end());
        report.injective = std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    }
    for (std::size_t u = 0; u < ball.size(); ++u)
        for (std::size_t v = 0; v < ball.size(); ++v) {
            const bool fast = core_tuple_leq(ball.tuples[u], ball.tuples[v]);
            const bool slow = subword_oracle(ball.elements[u], ball.elements[v], opts);
            ++report.pairs_checked;
            if (fast != slow) report.discrepancies.push_back({ball.elements[u], ball.elements[v], fast, slow});
        }
    return report;
}

/// DOT rendering of the Hasse diagram, one rank per length, minimum at the
/// bottom. Output depends only on the ball.
inline std::string hasse_dot(const PosetBall& ball, bool label_cores = false) {
    std::string out = "digraph bruhat {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < ball.size(); ++k) {
        std::string label = to_string(ball.elements[k]);
        if (label_cores) label += "\\n" + to_string(ball.tuples[k]);
        out += "  n" + std::to_string(k) + " [label=\"" + label + "\"];\n";
    }
    for (std::size_t k = 0; k < ball.size();) {
        std::size_t end = k;
        while (end < ball.size() && ball.depth[end] == ball.depth[k]) ++end;
        out += "  { rank=same;";
        for (std::size_t j = k; j < end; ++j) out += " n" + std::to_string(j) + ";";
        out += " }\n";
        k = end;
    }
    for (const auto& [u, v] : ball.covers)
        out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
    return out + "}\n";
}

} // namespace affperm
