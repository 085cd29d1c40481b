#pragma once

#include <limits>
#include <vector>

#include "abacus.hpp"
#include "partition.hpp"

namespace affperm {

// Addable nodes of residue i, top to bottom.
inline std::vector<Node> addable_nodes(const ChargedPartition& p, Int i, int e) {
    check_modulus(e);
    std::vector<Node> out;
    const Int h = static_cast<Int>(p.num_parts());
    for (Int r = 1; r <= h + 1; ++r) {
        if (r > 1 && p.part(r - 1) == p.part(r)) continue;
        Node n{r, p.part(r) + 1};
        if (residue(p, n, e) == mod(i, e)) out.push_back(n);
    }
    return out;
}

// Removable nodes of residue i, top to bottom.
inline std::vector<Node> removable_nodes(const ChargedPartition& p, Int i, int e) {
    check_modulus(e);
    std::vector<Node> out;
    const Int h = static_cast<Int>(p.num_parts());
    for (Int r = 1; r <= h; ++r) {
        if (p.part(r) == p.part(r + 1)) continue;
        Node n{r, p.part(r)};
        if (residue(p, n, e) == mod(i, e)) out.push_back(n);
    }
    return out;
}

/// Adds every addable i-node, or removes every removable i-node, of an
/// e-core. At most one of the two kinds exists for a core, so the result is
/// well defined and the operation is an involution.
inline ChargedPartition toggle_i_nodes(const ChargedPartition& p, Int i, int e) {
    check_modulus(e);
    if (!is_e_core(p, e))
        throw DomainError("toggle_i_nodes: " + to_string(p) + " is not a " + std::to_string(e) + "-core");
    std::vector<Int> parts = p.parts();
    const auto add = addable_nodes(p, i, e);
    if (!add.empty()) {
        for (const Node& n : add) {
            if (n.row > static_cast<Int>(parts.size())) parts.push_back(0);
            ++parts[static_cast<std::size_t>(n.row - 1)];
        }
        return ChargedPartition(std::move(parts), p.charge());
    }
    for (const Node& n : removable_nodes(p, i, e)) --parts[static_cast<std::size_t>(n.row - 1)];
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return ChargedPartition(std::move(parts), p.charge());
}

// A rim hook, in coordinates of the diagram that contains it.
struct RimHook {
    std::vector<Node> nodes;  // sorted row-major
    Node hand;                // top-right end
    Node foot;                // bottom-left end

    std::size_t size() const noexcept { return nodes.size(); }
    friend bool operator==(const RimHook&, const RimHook&) = default;
};

struct HookAddition {
    ChargedPartition before;
    RimHook hook;             // coordinates in `after`
    ChargedPartition after;
    Int hand_residue = 0;
};

/// Smallest rim hook that can be added to `p` with exactly one node in the
/// first column below the last row of `p`, and whose hand has the requested
/// residue.
///
/// Such a hook has its foot at (h+1, 1), h the number of parts. If its top row
/// is a, rows a+1..h+1 of the enlarged diagram have length p_{r-1} + 1 and row
/// a ends anywhere in (p_a, p_{a-1}]. Walking a upwards from h+1 enumerates the
/// candidates by increasing size, so the first residue match is the smallest.
inline HookAddition smallest_first_column_hook(const ChargedPartition& p, Int hand_residue, int e) {
    check_modulus(e);
    const Int target = mod(hand_residue, e);
    const Int h = static_cast<Int>(p.num_parts());
    constexpr Int unbounded = std::numeric_limits<Int>::max();

    for (Int a = h + 1; a >= 1; --a) {
        const Int lo = p.part(a) + 1;
        const Int hi = a == 1 ? unbounded : p.part(a - 1);
        // Residues of consecutive hand positions are consecutive, so at most e
        // steps are needed within a row.
        for (Int m = lo; m <= hi && m < lo + e; ++m) {
            if (mod(m - a + p.charge(), e) != target) continue;

            HookAddition out;
            out.before = p;
            out.hand_residue = target;
            std::vector<Int> parts = p.parts();
            parts.resize(static_cast<std::size_t>(h + 1), 0);
            for (Int r = a; r <= h + 1; ++r) {
                const Int new_len = r == a ? m : p.part(r - 1) + 1;
                for (Int col = p.part(r) + 1; col <= new_len; ++col) out.hook.nodes.push_back({r, col});
                parts[static_cast<std::size_t>(r - 1)] = new_len;
            }
            out.hook.hand = {a, m};
            out.hook.foot = {h + 1, 1};
            out.after = ChargedPartition(std::move(parts), p.charge());
            return out;
        }
    }
    throw std::logic_error("smallest_first_column_hook: no candidate found");
}

inline ChargedPartition add_rim_hook_first_column(const ChargedPartition& p, Int hand_residue, int e) {
    return smallest_first_column_hook(p, hand_residue, e).after;
}

} // namespace affperm
