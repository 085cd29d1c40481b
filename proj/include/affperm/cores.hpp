#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "abacus.hpp"
#include "affine.hpp"
#include "nodes.hpp"
#include "partition.hpp"

namespace affperm {

/// The abacus of w·∅_c, i.e. the disjoint union of w(c+i) + eZ_{<0} for
/// i = 1..e. Each w(c+i) is the smallest gap of its residue class.
inline Abacus core_abacus_from_window(const AffinePermutation& w, Int c) {
    const int e = w.modulus();
    check_charge(e, c);
    std::vector<Int> gaps;
    for (Int i = 1; i <= e; ++i) gaps.push_back(w(c + i));
    const auto [lo, hi] = std::minmax_element(gaps.begin(), gaps.end());
    std::vector<Int> first_gap(static_cast<std::size_t>(e));
    for (Int g : gaps) first_gap[static_cast<std::size_t>(mod(g, e))] = g;
    std::vector<Int> beads;
    for (Int x = *lo + 1; x < *hi; ++x)
        if (x < first_gap[static_cast<std::size_t>(mod(x, e))]) beads.push_back(x);
    return Abacus(*lo - 1, std::move(beads));
}

inline ChargedPartition core_from_window(const AffinePermutation& w, Int c) {
    return to_partition(core_abacus_from_window(w, c));
}

// s_i acting on a charged e-core through its abacus.
inline ChargedPartition act_generator(const ChargedPartition& p, Int i, int e) {
    const Abacus a = from_partition(p);
    if (!is_e_core(a, e))
        throw DomainError("act_generator: " + to_string(p) + " is not a " + std::to_string(e) + "-core");
    return to_partition(act_on_abacus(a, i, e));
}

/// The e-tuple (w·∅_0, ..., w·∅_{e-1}) of charged e-cores attached to an
/// affine permutation. Component c has charge c, and the abaci form a chain
/// A_0 ⊆ A_1 ⊆ ... ⊆ A_{e-1} ⊆ A_0 + e, consecutive ones differing by a bead.
class CoreTuple {
public:
    // Throws DomainError unless the components satisfy the chain condition.
    CoreTuple(int e, std::vector<ChargedPartition> cores) : e_(e), cores_(std::move(cores)) {
        if (auto why = violation()) throw DomainError("invalid core tuple: " + *why);
    }

    static CoreTuple empty(int e) {
        check_modulus(e);
        std::vector<ChargedPartition> cores;
        for (int c = 0; c < e; ++c) cores.push_back(ChargedPartition::empty(c));
        return CoreTuple(e, std::move(cores));
    }

    int modulus() const noexcept { return e_; }
    const std::vector<ChargedPartition>& cores() const noexcept { return cores_; }
    const ChargedPartition& operator[](std::size_t c) const { return cores_.at(c); }

    std::vector<Abacus> abaci() const {
        std::vector<Abacus> out;
        for (const auto& p : cores_) out.push_back(from_partition(p));
        return out;
    }

    friend bool operator==(const CoreTuple&, const CoreTuple&) = default;

    // Human-readable reason the data is not a valid tuple, if any.
    std::optional<std::string> violation() const {
        check_modulus(e_);
        if (cores_.size() != static_cast<std::size_t>(e_)) return "expected " + std::to_string(e_) + " components";
        for (int c = 0; c < e_; ++c) {
            const auto& p = cores_[static_cast<std::size_t>(c)];
            if (p.charge() != c) return "component " + std::to_string(c) + " has charge " + std::to_string(p.charge());
            if (!is_e_core(p, e_)) return "component " + std::to_string(c) + " is not an e-core";
        }
        const auto ab = abaci();
        for (int c = 1; c < e_; ++c)
            if (!ab[static_cast<std::size_t>(c - 1)].subset_of(ab[static_cast<std::size_t>(c)]))
                return "abacus chain breaks at component " + std::to_string(c);
        if (!ab.back().subset_of(ab.front().shifted(e_))) return "last abacus not contained in A_0 + e";
        return std::nullopt;
    }

private:
    int e_;
    std::vector<ChargedPartition> cores_;
};

// One core per charge, each straight from the window.
inline CoreTuple core_tuple_from_window(const AffinePermutation& w) {
    std::vector<ChargedPartition> cores;
    for (int c = 0; c < w.modulus(); ++c) cores.push_back(core_from_window(w, c));
    return CoreTuple(w.modulus(), std::move(cores));
}

/// A_0 = w(Z_{<=0}), then A_c = A_{c-1} ∪ {w(c)}.
inline CoreTuple core_tuple_inductive(const AffinePermutation& w) {
    const int e = w.modulus();
    Abacus a = core_abacus_from_window(w, 0);
    std::vector<ChargedPartition> cores{to_partition(a)};
    for (int c = 1; c < e; ++c) {
        if (a.contains(w(c)))
            throw std::logic_error("core_tuple_inductive: w(" + std::to_string(c) + ") is not a gap");
        a = add_bead(a, w(c));
        cores.push_back(to_partition(a));
    }
    return CoreTuple(e, std::move(cores));
}

struct GrassmannianRecovery {
    CoreTuple tuple;
    AffinePermutation window;   // the Grassmannian element at charge 0
    std::vector<Int> residues;  // j_1, ..., j_{e-1}
};

/// Builds the core tuple of the charge-0 Grassmannian element whose core has
/// abacus a0: add a bead in the leftmost gap, then repeatedly in the leftmost
/// gap of a residue not used yet. The positions filled are w(1), ..., w(e-1).
inline GrassmannianRecovery core_tuple_grassmannian(const Abacus& a0, int e) {
    check_modulus(e);
    if (a0.charge() != 0) throw DomainError("core_tuple_grassmannian: abacus has charge " + std::to_string(a0.charge()));
    if (!is_e_core(a0, e)) throw DomainError("core_tuple_grassmannian: abacus is not an e-core");

    std::vector<bool> used(static_cast<std::size_t>(e), false);
    std::vector<Int> residues, window;
    std::vector<ChargedPartition> cores{to_partition(a0)};
    Abacus a = a0;
    for (int c = 1; c < e; ++c) {
        Int x = a.min_gap();
        while (a.contains(x) || used[static_cast<std::size_t>(mod(x, e))]) ++x;
        used[static_cast<std::size_t>(mod(x, e))] = true;
        residues.push_back(mod(x, e));
        window.push_back(x);
        a = add_bead(a, x);
        cores.push_back(to_partition(a));
    }
    Int sum = 0;
    for (Int x : window) sum += x;
    window.push_back(static_cast<Int>(e) * (e + 1) / 2 - sum);
    return {CoreTuple(e, std::move(cores)), AffinePermutation(e, std::move(window)), std::move(residues)};
}

/// The Grassmannian element at charge c whose c-charged core has abacus a:
/// the smallest gap of each residue class, sorted into positions c+1..c+e.
inline AffinePermutation grassmannian_from_core(const Abacus& a, int e) {
    check_modulus(e);
    const Int c = a.charge();
    check_charge(e, c);
    if (!is_e_core(a, e)) throw DomainError("grassmannian_from_core: abacus is not an e-core");
    std::vector<Int> gaps;
    std::vector<bool> seen(static_cast<std::size_t>(e), false);
    for (Int x = a.min_gap(); static_cast<int>(gaps.size()) < e; ++x) {
        if (a.contains(x) || seen[static_cast<std::size_t>(mod(x, e))]) continue;
        seen[static_cast<std::size_t>(mod(x, e))] = true;
        gaps.push_back(x);
    }
    std::vector<Int> win(static_cast<std::size_t>(e));
    for (Int k = 0; k < e; ++k) {
        const Int pos = c + 1 + k;
        if (pos <= e) win[static_cast<std::size_t>(pos - 1)] = gaps[static_cast<std::size_t>(k)];
        else win[static_cast<std::size_t>(pos - e - 1)] = gaps[static_cast<std::size_t>(k)] - e;
    }
    return AffinePermutation(e, std::move(win));
}

struct RimHookStep {
    Int target_charge = 0;     // charge of the core produced by this step
    HookAddition addition;     // λ^(c-1) + hook = μ
    ChargedPartition result;   // μ with its first column removed
};

struct RimHookTrace {
    ChargedPartition start;        // λ^(0)
    std::vector<RimHookStep> steps;  // produce λ^(1), ..., λ^(e-1)
    RimHookStep wrap;              // one more step from λ^(e-1); gives λ^(0) at charge e
};

/// Replays the partition-only construction: from λ^(c-1), add the smallest rim
/// hook with a single node below the first column and hand residue w(c) - 1,
/// then strip the first column.
inline RimHookTrace explain_rimhook(const AffinePermutation& w) {
    const int e = w.modulus();
    RimHookTrace trace;
    trace.start = core_from_window(w, 0);
    ChargedPartition cur = trace.start;
    for (int c = 1; c <= e; ++c) {
        RimHookStep step;
        step.target_charge = c;
        step.addition = smallest_first_column_hook(cur, w(c) - 1, e);
        step.result = remove_first_column(step.addition.after);
        cur = step.result;
        if (c < e) trace.steps.push_back(std::move(step));
        else trace.wrap = std::move(step);
    }
    return trace;
}

inline CoreTuple core_tuple_rimhook(const AffinePermutation& w) {
    const auto trace = explain_rimhook(w);
    std::vector<ChargedPartition> cores{trace.start};
    for (const auto& s : trace.steps) cores.push_back(s.result);
    return CoreTuple(w.modulus(), std::move(cores));
}

inline CoreTuple core_tuple(const AffinePermutation& w) { return core_tuple_inductive(w); }

inline CoreTuple multicore_act(const CoreTuple& t, Int i) {
    std::vector<ChargedPartition> cores;
    for (const auto& p : t.cores()) cores.push_back(act_generator(p, i, t.modulus()));
    return CoreTuple(t.modulus(), std::move(cores));
}

inline NodeSignature multicore_signature(const CoreTuple& t, Int i) {
    NodeSignature sig;
    for (const auto& p : t.cores()) {
        const auto s = addable_removable_signature(from_partition(p), i, t.modulus());
        sig.has_addable = sig.has_addable || s.has_addable;
        sig.has_removable = sig.has_removable || s.has_removable;
    }
    return sig;
}

inline std::string to_string(const CoreTuple& t) {
    std::string s;
    for (std::size_t c = 0; c < t.cores().size(); ++c) {
        if (c) s += "; ";
        s += to_string(t.cores()[c]);
    }
    return s;
}

} // namespace affperm
