#include <gtest/gtest.h>

#include <affperm/abacus.hpp>
#include <affperm/nodes.hpp>

#include "oracles.hpp"

using namespace affperm;

TEST(Abacus, NormalizedFormIsEnforced) {
    EXPECT_THROW(Abacus(0, {1}), DomainError);
    EXPECT_THROW(Abacus(0, {3, 2}), DomainError);
    EXPECT_EQ(Abacus::normalized(0, {1, 2, 4, -5}), Abacus(2, {4}));
    EXPECT_TRUE(Abacus(-2, {1, 3}).contains(-7));
    EXPECT_FALSE(Abacus(-2, {1, 3}).contains(-1));
    EXPECT_TRUE(Abacus(-2, {1, 3}).contains(3));
}

TEST(Abacus, Charge) {
    EXPECT_EQ(Abacus(-2, {1, 3, 4, 7}).charge(), 2);
    for (Int c = -4; c < 5; ++c) EXPECT_EQ(Abacus::left_of(c).charge(), c);
    EXPECT_EQ(Abacus(-5, {-3, -2, -1, 1, 3, 5}).charge(), 1);
}

TEST(Abacus, PartitionExamples) {
    EXPECT_EQ(from_partition(ChargedPartition({5, 3, 3, 2}, 2)), Abacus(-2, {1, 3, 4, 7}));
    EXPECT_EQ(to_partition(Abacus(-2, {1, 3, 4, 7})), ChargedPartition({5, 3, 3, 2}, 2));
    for (Int c = -3; c < 4; ++c) {
        EXPECT_EQ(from_partition(ChargedPartition::empty(c)), Abacus::left_of(c));
        EXPECT_EQ(to_partition(Abacus::left_of(c)), ChargedPartition::empty(c));
    }
    EXPECT_EQ(from_partition(ChargedPartition({4, 3, 2, 1, 1, 1}, 1)), Abacus(-5, {-3, -2, -1, 1, 3, 5}));
}

TEST(Abacus, RoundTripAndBetaNumbers) {
    for (const auto& parts : oracle::partitions_up_to(10))
        for (Int c = -3; c <= 7; ++c) {
            const ChargedPartition p(parts, c);
            const Abacus a = from_partition(p);
            ASSERT_EQ(to_partition(a), p);
            ASSERT_EQ(a.charge(), c);
            ASSERT_EQ(from_partition(to_partition(a)), a);
            const Int lo = c - static_cast<Int>(parts.size()) - 3;
            const auto beads = oracle::beads(parts, c, lo);
            for (Int x = lo; x <= a.max_bead() + 2; ++x) ASSERT_EQ(a.contains(x), beads.count(x) == 1);
        }
}

TEST(Abacus, CorePredicate) {
    EXPECT_TRUE(is_e_core(Abacus(-5, {-3, -2, -1, 1, 3, 5}), 4));
    EXPECT_TRUE(is_e_core(Abacus(0, {3}), 3));
    EXPECT_FALSE(is_e_core(Abacus(0, {3}), 2));
    for (int e = 2; e < 6; ++e) EXPECT_TRUE(is_e_core(Abacus::left_of(e - 7), e));
    EXPECT_THROW(is_e_core(Abacus(), 1), InvalidModulus);
}

TEST(Abacus, SignatureExamples) {
    EXPECT_EQ(addable_removable_signature(Abacus::left_of(1), 1, 4), (NodeSignature{true, false}));
    const Abacus big = from_partition(ChargedPartition({4, 3, 2, 1, 1, 1}, 1));
    EXPECT_EQ(addable_removable_signature(big, 0, 4), (NodeSignature{false, true}));
    // The removable 2-node is (2,3); the addable nodes have residues 1 and 3 only.
    EXPECT_EQ(addable_removable_signature(big, 2, 4), (NodeSignature{false, true}));
    EXPECT_EQ(addable_removable_signature(big, 3, 4), (NodeSignature{true, false}));
}

TEST(Abacus, SignatureAgreesWithDiagrams) {
    for (const auto& parts : oracle::partitions_up_to(9))
        for (int e = 2; e <= 5; ++e)
            for (Int c = -2; c <= e + 1; ++c) {
                const ChargedPartition p(parts, c);
                const Abacus a = from_partition(p);
                const bool core = is_e_core(a, e);
                for (Int i = 0; i < e; ++i) {
                    const auto sig = addable_removable_signature(a, i, e);
                    ASSERT_EQ(sig.has_addable, !oracle::addable(parts, c, i, e).empty());
                    ASSERT_EQ(sig.has_removable, !oracle::removable(parts, c, i, e).empty());
                    if (core) {
                        ASSERT_FALSE(sig.has_addable && sig.has_removable);
                    }
                }
            }
}

TEST(Abacus, AddBead) {
    // A_0 of w = [0,3,1,6] at e = 4, then beads at w(1) = 0 and w(2) = 3.
    const Abacus a0(-1, {2});
    const Abacus a1 = add_bead(a0, 0);
    EXPECT_EQ(a1, Abacus(0, {2}));
    EXPECT_EQ(a1.charge(), 1);
    EXPECT_EQ(add_bead(a1, 3), Abacus(0, {2, 3}));
    EXPECT_EQ(add_bead(Abacus::left_of(4), 5), Abacus::left_of(5));
    EXPECT_THROW(add_bead(a1, 2), PreconditionViolation);
    EXPECT_THROW(add_bead(a1, -10), PreconditionViolation);
}

TEST(Abacus, MoveBeadExamples) {
    const Abacus two = from_partition(ChargedPartition({2}, 0));
    EXPECT_EQ(two, Abacus(-1, {2}));
    EXPECT_THROW(move_bead(two, 2, -1, 4), PreconditionViolation);
    EXPECT_THROW(move_bead(two, 1, 0, 4), PreconditionViolation);
    const auto m = move_bead(two, 2, 0, 4);
    EXPECT_EQ(to_partition(m.result), ChargedPartition::empty(0));
    EXPECT_EQ(m.hook, (HookWitness{false, 2, 1}));

    // (1,1) at charge 4 has beads 5, 4 over Z_{<=2}; a 2-hook removal empties it.
    const Abacus col = from_partition(ChargedPartition({1, 1}, 4));
    EXPECT_EQ(col, Abacus(2, {4, 5}));
    const auto m2 = move_bead(col, 5, 3, 2);
    EXPECT_EQ(to_partition(m2.result), ChargedPartition::empty(4));
    EXPECT_EQ(m2.hook.length, 2);

    const auto back = move_bead(m2.result, 3, 5, 2);
    EXPECT_EQ(back.result, col);
    EXPECT_TRUE(back.hook.added);
}

// Moving the bead just left of the first gap to x, then refilling that spot,
// is the same as adding a bead at x.
TEST(Abacus, TwoMoveIdentity) {
    for (const auto& parts : oracle::partitions_up_to(7))
        for (Int c = -2; c <= 3; ++c) {
            const Abacus a = from_partition(ChargedPartition(parts, c));
            const Int y = a.min_gap() - 1;
            for (Int x = a.min_gap(); x <= a.max_bead() + 4; ++x) {
                if (a.contains(x)) continue;
                const auto moved = move_bead(a, y, x, 3).result;
                ASSERT_EQ(add_bead(moved, y), add_bead(a, x));
            }
        }
}

// Moving a bead from x to a gap x - h removes an h-rim hook whose hand has
// residue x - 1, and the hook meets the first column in (#parts lost) nodes.
TEST(Abacus, BeadMovesAreRimHookRemovals) {
    for (const auto& parts : oracle::partitions_up_to(8))
        for (int e = 2; e <= 4; ++e) {
            const Int c = 1;
            const ChargedPartition lam(parts, c);
            const Abacus a = from_partition(lam);
            for (Int x : a.high_beads())
                for (Int to = a.min_gap(); to < x; ++to) {
                    if (a.contains(to)) continue;
                    const auto m = move_bead(a, x, to, e);
                    const auto mu = to_partition(m.result);
                    ASSERT_EQ(mu.charge(), c);
                    auto diff = oracle::diagram(parts);
                    for (const Node& n : oracle::diagram(mu.parts())) diff.erase(n);
                    ASSERT_EQ(static_cast<Int>(diff.size()), x - to);
                    Int left = diff.begin()->col;
                    for (const Node& n : diff) left = std::min(left, n.col);
                    const Node gamma{diff.begin()->row, left};
                    ASSERT_EQ(oracle::rim_hook(oracle::diagram(parts), gamma), diff);
                    ASSERT_EQ(oracle::res(oracle::hand_of(diff, gamma), c, e), m.hook.hand_residue);

                    Int first_column = 0;
                    for (const Node& n : diff) first_column += n.col == 1;
                    ASSERT_EQ(first_column, static_cast<Int>(lam.num_parts() - mu.num_parts()));

                    // Bead leaves for the leftmost gap: exactly one first-column node
                    // iff x = m + 1 or m + 1 is a gap.
                    if (to == a.min_gap()) {
                        const bool single = x == to + 1 || !a.contains(to + 1);
                        ASSERT_EQ(first_column == 1, single);
                    }
                }
        }
}

TEST(Abacus, GeneratorActionTogglesNodes) {
    for (const auto& parts : oracle::partitions_up_to(10))
        for (int e = 2; e <= 5; ++e)
            for (Int c = 0; c < e; ++c) {
                const ChargedPartition p(parts, c);
                const Abacus a = from_partition(p);
                if (!is_e_core(a, e)) continue;
                for (Int i = 0; i < e; ++i) {
                    const Abacus b = act_on_abacus(a, i, e);
                    ASSERT_TRUE(is_e_core(b, e));
                    ASSERT_EQ(b.charge(), c);
                    ASSERT_EQ(to_partition(b), toggle_i_nodes(p, i, e));
                }
            }
}

TEST(Abacus, Render) {
    EXPECT_EQ(render_abacus(Abacus(-2, {1, 3, 4, 7}), -4, 9),
              " -4 -3 -2 -1 |  0  1  2  3  4  5  6  7  8  9\n"
              "  o  o  o  . |  .  o  .  o  o  .  .  o  .  .\n");
}
