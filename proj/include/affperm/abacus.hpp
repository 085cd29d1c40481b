#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "error.hpp"
#include "partition.hpp"

namespace affperm {

/// A subset of Z that contains every integer up to some point and only
/// finitely many integers beyond it.
///
/// Stored in normalized form: every x <= floor() is a bead, floor() + 1 is a
/// gap, and high_beads() lists the remaining beads in increasing order (all
/// greater than floor() + 1). Equal sets therefore have equal representations.
class Abacus {
public:
    // Z_{<=0}
    Abacus() = default;

    // Requires the normalized form; throws DomainError otherwise.
    Abacus(Int floor, std::vector<Int> high_beads) : floor_(floor), high_(std::move(high_beads)) {
        for (std::size_t k = 0; k < high_.size(); ++k) {
            if (high_[k] <= floor_ + 1)
                throw DomainError("abacus high beads must exceed floor + 1");
            if (k > 0 && high_[k] <= high_[k - 1])
                throw DomainError("abacus high beads must be strictly increasing");
        }
    }

    // Z_{<=c}
    static Abacus left_of(Int c) { return Abacus(c, {}); }

    // The set Z_{<=floor} ∪ beads, brought into normal form.
    static Abacus normalized(Int floor, std::vector<Int> beads) {
        std::sort(beads.begin(), beads.end());
        beads.erase(std::unique(beads.begin(), beads.end()), beads.end());
        auto it = std::upper_bound(beads.begin(), beads.end(), floor);
        while (it != beads.end() && *it == floor + 1) {
            ++floor;
            ++it;
        }
        Abacus a;
        a.floor_ = floor;
        a.high_.assign(it, beads.end());
        return a;
    }

    Int floor() const noexcept { return floor_; }
    const std::vector<Int>& high_beads() const noexcept { return high_; }
    Int min_gap() const noexcept { return floor_ + 1; }
    // Largest bead.
    Int max_bead() const noexcept { return high_.empty() ? floor_ : high_.back(); }

    bool contains(Int x) const noexcept {
        return x <= floor_ || std::binary_search(high_.begin(), high_.end(), x);
    }

    // Position reached by sliding all beads to the left.
    Int charge() const noexcept { return floor_ + static_cast<Int>(high_.size()); }

    bool subset_of(const Abacus& other) const noexcept {
        if (floor_ > other.floor_) return false;
        return std::all_of(high_.begin(), high_.end(),
                           [&](Int x) { return other.contains(x); });
    }

    Abacus shifted(Int k) const {
        Abacus a = *this;
        a.floor_ += k;
        for (Int& x : a.high_) x += k;
        return a;
    }

    friend bool operator==(const Abacus&, const Abacus&) = default;

private:
    Int floor_ = 0;
    std::vector<Int> high_;
};

// Beads λ_k - k + c + 1.
inline Abacus from_partition(const ChargedPartition& p) {
    const Int h = static_cast<Int>(p.num_parts());
    std::vector<Int> beads;
    beads.reserve(p.num_parts());
    for (Int k = h; k >= 1; --k) beads.push_back(p.part(k) - k + p.charge() + 1);
    return Abacus(p.charge() - h, std::move(beads));
}

// Each bead above the floor contributes a part equal to the number of gaps on its left.
inline ChargedPartition to_partition(const Abacus& a) {
    const auto& high = a.high_beads();
    const Int m = static_cast<Int>(high.size());
    std::vector<Int> parts;
    parts.reserve(high.size());
    for (Int k = m - 1; k >= 0; --k)
        parts.push_back(high[static_cast<std::size_t>(k)] - a.floor() - 1 - k);
    return ChargedPartition(std::move(parts), a.charge());
}

inline bool is_e_core(const Abacus& a, int e) {
    check_modulus(e);
    return std::all_of(a.high_beads().begin(), a.high_beads().end(),
                       [&](Int x) { return a.contains(x - e); });
}

inline bool is_e_core(const ChargedPartition& p, int e) { return is_e_core(from_partition(p), e); }

struct NodeSignature {
    bool has_addable = false;
    bool has_removable = false;

    friend bool operator==(const NodeSignature&, const NodeSignature&) = default;
};

// Addable i-node  <=> bead x ≡ i with a gap at x+1.
// Removable i-node <=> bead y ≡ i+1 with a gap at y-1.
inline NodeSignature addable_removable_signature(const Abacus& a, Int i, int e) {
    check_modulus(e);
    NodeSignature sig;
    const Int ri = mod(i, e);
    const Int ri1 = mod(i + 1, e);
    if (mod(a.floor(), e) == ri) sig.has_addable = true;
    for (Int x : a.high_beads()) {
        if (mod(x, e) == ri && !a.contains(x + 1)) sig.has_addable = true;
        if (mod(x, e) == ri1 && !a.contains(x - 1)) sig.has_removable = true;
    }
    return sig;
}

inline Abacus add_bead(const Abacus& a, Int x) {
    if (a.contains(x))
        throw PreconditionViolation("add_bead: position " + std::to_string(x) + " is already a bead");
    std::vector<Int> beads = a.high_beads();
    beads.push_back(x);
    return Abacus::normalized(a.floor(), std::move(beads));
}

inline Abacus remove_bead(const Abacus& a, Int x) {
    if (!a.contains(x))
        throw PreconditionViolation("remove_bead: position " + std::to_string(x) + " is a gap");
    // Materialize down to x so the removed bead is explicit.
    const Int base = std::min(a.floor(), x - 1);
    std::vector<Int> beads;
    for (Int y = base + 1; y <= a.floor(); ++y)
        if (y != x) beads.push_back(y);
    for (Int y : a.high_beads())
        if (y != x) beads.push_back(y);
    return Abacus::normalized(base, std::move(beads));
}

// The rim hook a bead move stands for. A move to the left removes a hook, a
// move to the right adds one; either way the hook has |to - from| nodes.
struct HookWitness {
    bool added = false;
    Int length = 0;
    Int hand_residue = 0;

    friend bool operator==(const HookWitness&, const HookWitness&) = default;
};

struct BeadMove {
    Abacus result;
    HookWitness hook;
};

inline BeadMove move_bead(const Abacus& a, Int from, Int to, int e) {
    check_modulus(e);
    if (!a.contains(from))
        throw PreconditionViolation("move_bead: source " + std::to_string(from) + " is a gap");
    if (a.contains(to))
        throw PreconditionViolation("move_bead: target " + std::to_string(to) + " is a bead");
    BeadMove m{add_bead(remove_bead(a, from), to), {}};
    m.hook.added = to > from;
    m.hook.length = m.hook.added ? to - from : from - to;
    m.hook.hand_residue = mod((m.hook.added ? to : from) - 1, e);
    return m;
}

// The generator s_i applied elementwise: swaps i + ke and i + 1 + ke.
inline Int apply_generator(Int x, Int i, int e) {
    const Int r = mod(x, e);
    const Int ri = mod(i, e);
    if (r == ri) return x + 1;
    if (r == mod(ri + 1, e)) return x - 1;
    return x;
}

inline Abacus act_on_abacus(const Abacus& a, Int i, int e) {
    check_modulus(e);
    // s_i moves integers by at most one, so everything <= floor - 2 stays a bead.
    const Int base = a.floor() - 2;
    std::vector<Int> beads;
    for (Int y = base + 1; y <= a.max_bead() + 1; ++y)
        if (a.contains(apply_generator(y, i, e))) beads.push_back(y);
    return Abacus::normalized(base, std::move(beads));
}

/// Text rendering of the bead row: a line of position labels above a line of
/// markers ('o' bead, '.' gap) with '|' marking the place just left of 0.
inline std::string render_abacus(const Abacus& a, Int lo, Int hi) {
    std::string labels, marks;
    for (Int x = lo; x <= hi; ++x) {
        if (x == 0) {
            labels += " |";
            marks += " |";
        }
        std::string num = std::to_string(x);
        labels += std::string(num.size() < 3 ? 3 - num.size() : 1, ' ') + num;
        marks += std::string("  ") + (a.contains(x) ? 'o' : '.');
    }
    return labels + "\n" + marks + "\n";
}

inline std::string render_abacus(const Abacus& a) {
    const Int lo = std::min<Int>(a.floor() - 2, 0);
    const Int hi = std::max<Int>(a.max_bead() + 2, 1);
    return render_abacus(a, lo, hi);
}

} // namespace affperm
