#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the code paths they are used to check.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <affperm/error.hpp>
#include <affperm/partition.hpp>

namespace affperm::oracle {

using Diagram = std::set<Node>;

inline Diagram diagram(const std::vector<Int>& parts) {
    Diagram d;
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (Int b = 1; b <= parts[a]; ++b) d.insert({static_cast<Int>(a) + 1, b});
    return d;
}

// Closed under moving up or left.
inline bool is_young(const Diagram& d) {
    for (const Node& n : d) {
        if (n.row > 1 && !d.count({n.row - 1, n.col})) return false;
        if (n.col > 1 && !d.count({n.row, n.col - 1})) return false;
    }
    return true;
}

inline std::vector<Int> parts_of(const Diagram& d) {
    std::vector<Int> parts;
    for (const Node& n : d) {
        if (static_cast<Int>(parts.size()) < n.row) parts.resize(static_cast<std::size_t>(n.row), 0);
        ++parts[static_cast<std::size_t>(n.row - 1)];
    }
    return parts;
}

inline Int res(Node n, Int charge, int e) { return mod(n.col - n.row + charge, e); }

// Addable / removable nodes straight from the definition.
inline std::vector<Node> addable(const std::vector<Int>& parts, Int charge, Int i, int e) {
    const Diagram d = diagram(parts);
    std::vector<Node> out;
    const Int rows = static_cast<Int>(parts.size()) + 1;
    const Int cols = (parts.empty() ? 0 : parts.front()) + 1;
    for (Int a = 1; a <= rows; ++a)
        for (Int b = 1; b <= cols; ++b) {
            if (d.count({a, b})) continue;
            Diagram bigger = d;
            bigger.insert({a, b});
            if (is_young(bigger) && res({a, b}, charge, e) == mod(i, e)) out.push_back({a, b});
        }
    return out;
}

inline std::vector<Node> removable(const std::vector<Int>& parts, Int charge, Int i, int e) {
    const Diagram d = diagram(parts);
    std::vector<Node> out;
    for (const Node& n : d) {
        Diagram smaller = d;
        smaller.erase(n);
        if (is_young(smaller) && res(n, charge, e) == mod(i, e)) out.push_back(n);
    }
    return out;
}

// All partitions of n, parts in decreasing order.
inline void partitions_rec(Int n, Int max_part, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (Int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<Int>> partitions_of(Int n) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

inline std::vector<std::vector<Int>> partitions_up_to(Int n) {
    std::vector<std::vector<Int>> out;
    for (Int k = 0; k <= n; ++k)
        for (auto& p : partitions_of(k)) out.push_back(std::move(p));
    return out;
}

// Beads of a charged partition restricted to [lo, ∞), as a plain set.
inline std::set<Int> beads(const std::vector<Int>& parts, Int charge, Int lo) {
    std::set<Int> s;
    for (Int k = 1;; ++k) {
        const Int part = k <= static_cast<Int>(parts.size()) ? parts[static_cast<std::size_t>(k - 1)] : 0;
        const Int x = part - k + charge + 1;
        if (x < lo) break;
        s.insert(x);
    }
    return s;
}

/// Rim hook R_γ of a diagram: nodes (x, y) with x >= a, y >= b and (x+1, y+1)
/// outside the diagram. Returns the hook nodes.
inline Diagram rim_hook(const Diagram& d, Node gamma) {
    Diagram r;
    for (const Node& n : d)
        if (n.row >= gamma.row && n.col >= gamma.col && !d.count({n.row + 1, n.col + 1})) r.insert(n);
    return r;
}

// Hand: the node in the top row of the hook (row a) with the largest column.
inline Node hand_of(const Diagram& hook, Node gamma) {
    Node h = gamma;
    for (const Node& n : hook)
        if (n.row == gamma.row && n.col > h.col) h = n;
    return h;
}

/// Window of w s_i computed by hand from the window of w.
inline std::vector<Int> right_mult(const std::vector<Int>& w, int i) {
    const int e = static_cast<int>(w.size());
    std::vector<Int> v = w;
    if (i == 0) {
        v[0] = w[static_cast<std::size_t>(e - 1)] - e;
        v[static_cast<std::size_t>(e - 1)] = w[0] + e;
    } else {
        std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
    }
    return v;
}

// BFS depth of every window within `radius` of the identity in the Cayley graph.
inline std::map<std::vector<Int>, Int> cayley_ball(int e, Int radius) {
    std::vector<Int> id(static_cast<std::size_t>(e));
    for (int j = 0; j < e; ++j) id[static_cast<std::size_t>(j)] = j + 1;
    std::map<std::vector<Int>, Int> depth{{id, 0}};
    std::vector<std::vector<Int>> frontier{id};
    for (Int d = 1; d <= radius; ++d) {
        std::vector<std::vector<Int>> next;
        for (const auto& w : frontier)
            for (int i = 0; i < e; ++i) {
                auto v = right_mult(w, i);
                if (depth.emplace(v, d).second) next.push_back(std::move(v));
            }
        frontier = std::move(next);
    }
    return depth;
}

// w(x) read straight off the window.
inline Int eval(const std::vector<Int>& w, Int x) {
    const Int e = static_cast<Int>(w.size());
    const Int r = mod(x - 1, static_cast<int>(e));
    return w[static_cast<std::size_t>(r)] + (x - 1 - r);
}

// {w(x) : x <= c} intersected with [lo, ∞).
inline std::set<Int> image_below(const std::vector<Int>& w, Int c, Int lo) {
    Int spread = 0;
    for (std::size_t k = 0; k < w.size(); ++k) spread = std::max(spread, std::abs(w[k] - static_cast<Int>(k) - 1));
    std::set<Int> s;
    for (Int x = c; x >= lo - spread - 1; --x)
        if (eval(w, x) >= lo) s.insert(eval(w, x));
    return s;
}

// Entries in [-bound, bound] with one per residue class; one entry is then
// shifted by a multiple of e so the sum is e(e+1)/2.
inline std::vector<Int> random_window(std::mt19937_64& rng, int e, Int bound) {
    std::vector<Int> residues(static_cast<std::size_t>(e));
    std::iota(residues.begin(), residues.end(), 0);
    std::shuffle(residues.begin(), residues.end(), rng);
    std::vector<Int> w;
    for (Int r : residues) {
        const Int lo = -((bound + r) / e), hi = (bound - r) / e;
        std::uniform_int_distribution<Int> k(lo, hi);
        w.push_back(r + e * k(rng));
    }
    const Int sum = std::accumulate(w.begin(), w.end(), Int{0});
    const Int target = static_cast<Int>(e) * (e + 1) / 2;
    std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
    w[pick(rng)] += target - sum;
    return w;
}

// u^{-1} v is an affine transposition: it moves exactly two positions of the
// window, sending i to j + ke and j to i - ke.
inline bool differ_by_reflection(const std::vector<Int>& u, const std::vector<Int>& v) {
    const Int e = static_cast<Int>(u.size());
    std::vector<Int> t;
    for (Int x = 1; x <= e; ++x) {
        const Int y = eval(v, x);
        for (Int p = 1; p <= e; ++p)
            if (mod(eval(u, p) - y, static_cast<int>(e)) == 0) t.push_back(p + (y - eval(u, p)));
    }
    std::vector<Int> moved;
    for (Int x = 1; x <= e; ++x)
        if (t[static_cast<std::size_t>(x - 1)] != x) moved.push_back(x);
    if (moved.size() != 2) return false;
    const Int i = moved[0], j = moved[1];
    const Int ti = t[static_cast<std::size_t>(i - 1)], tj = t[static_cast<std::size_t>(j - 1)];
    return mod(ti - j, static_cast<int>(e)) == 0 && ti - j == i - tj;
}

// Bruhat order on a Cayley ball: covers are reflections raising the length by
// one, and the order is their reflexive-transitive closure.
struct ReflectionOrder {
    std::vector<std::vector<Int>> elements;
    std::vector<Int> depth;
    std::set<std::pair<std::size_t, std::size_t>> covers;
    std::vector<std::vector<bool>> leq;
};

inline ReflectionOrder reflection_order(int e, Int radius) {
    ReflectionOrder o;
    for (const auto& [w, d] : cayley_ball(e, radius)) {
        o.elements.push_back(w);
        o.depth.push_back(d);
    }
    const std::size_t n = o.elements.size();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (o.depth[v] == o.depth[u] + 1 && differ_by_reflection(o.elements[u], o.elements[v]))
                o.covers.insert({u, v});
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return o.depth[a] > o.depth[b]; });
    std::vector<std::vector<std::size_t>> up(n);
    for (const auto& [a, b] : o.covers) up[a].push_back(b);
    o.leq.assign(n, std::vector<bool>(n, false));
    // Longest first, so every cover target is finished before its source.
    for (std::size_t u : order) {
        o.leq[u][u] = true;
        for (std::size_t b : up[u])
            for (std::size_t z = 0; z < n; ++z)
                if (o.leq[b][z]) o.leq[u][z] = true;
    }
    return o;
}

} // namespace affperm::oracle
