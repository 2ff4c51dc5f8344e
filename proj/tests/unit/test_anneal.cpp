// Copyright 2026 The QAQC Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include "qaqc/anneal.hpp"
#include "qaqc/errors.hpp"
#include "qaqc/presets.hpp"
#include "test_util.hpp"

namespace {

using namespace qaqc;
using qaqc::ref::kPi;

OptimizerConfig exact_config(std::uint64_t seed) {
    OptimizerConfig c;
    c.tolerance = 1e-6;
    c.max_proposals = 300;
    c.seed = seed;
    return c;
}

TEST(RandomGate, RespectsAlphabetAndConnectivity) {
    const auto line = Alphabet::ibm().with_edges({{0, 1}, {1, 2}});
    Rng rng(1);
    int two_qubit = 0;
    for (int i = 0; i < 2000; ++i) {
        const Gate g = random_alphabet_gate(line, 3, rng);
        ASSERT_TRUE(line.admits(g));
        ASSERT_NE(g.kind(), GateKind::FixedOneQubit);
        two_qubit += g.arity() == 2;
    }
    EXPECT_GT(two_qubit, 0);
}

TEST(RandomGate, SingleQubitRegisterNeverDrawsPairs) {
    Rng rng(2);
    for (int i = 0; i < 500; ++i) {
        ASSERT_EQ(random_alphabet_gate(Alphabet::rigetti(), 1, rng).arity(), 1);
    }
}

TEST(RandomGate, BothCnotOrientations) {
    Rng rng(3);
    int forward = 0;
    int backward = 0;
    for (int i = 0; i < 2000; ++i) {
        const Gate g = random_alphabet_gate(Alphabet::ibm(), 2, rng);
        if (g.kind() == GateKind::CNOT) {
            (g.qubit(0) == 0 ? forward : backward)++;
        }
    }
    EXPECT_GT(forward, 0);
    EXPECT_GT(backward, 0);
}

TEST(Anneal, XBecomesTwoHalfPiRotations) {
    const auto r = anneal_structure(preset_target("X"), Alphabet::ibm(), 3, CostKind::hst(),
                                    exact_config(4));
    EXPECT_LT(r.best_cost.value, 1e-6);
    ASSERT_EQ(r.best_sequence.size(), 2U);
    EXPECT_EQ(r.best_sequence[0].kind(), GateKind::RxPlusHalfPi);
    EXPECT_EQ(r.best_sequence[1].kind(), GateKind::RxPlusHalfPi);
    EXPECT_EQ(depth(r.best_sequence), 2);
    EXPECT_EQ(r.stop_reason, "tolerance");
}

TEST(Anneal, IdentityShrinksToOneRz) {
    const auto r = anneal_structure(preset_target("I"), Alphabet::ibm(), 3, CostKind::hst(),
                                    exact_config(5));
    EXPECT_LT(r.best_cost.value, 1e-6);
    ASSERT_EQ(r.best_sequence.size(), 1U);
    EXPECT_EQ(r.best_sequence[0].kind(), GateKind::Rz);
    EXPECT_LT(ref::angle_distance(r.best_sequence[0].theta(), 0.0), 0.01 * kPi);
}

TEST(Anneal, DepthCapHoldsForEveryProposal) {
    auto c = exact_config(6);
    c.max_depth = 2;
    c.max_proposals = 60;
    const auto r = anneal_structure(preset_target("SWAP"), Alphabet::ibm(), 4, CostKind::hst(), c);
    for (const auto &rec : r.trace) {
        ASSERT_LE(depth(rec.sequence), 2);
        Alphabet::ibm().validate(rec.sequence);
    }
    EXPECT_GT(r.best_cost.value, 0.1);
}

TEST(Anneal, LengthCapHolds) {
    auto c = exact_config(7);
    c.max_length = 3;
    c.max_proposals = 40;
    const auto r = anneal_structure(preset_target("CZ"), Alphabet::ibm(), 5, CostKind::hst(), c);
    for (const auto &rec : r.trace) {
        ASSERT_LE(rec.sequence.size(), 3U);
    }
}

TEST(Anneal, BestIsTheBestOfTheTrace) {
    auto c = exact_config(8);
    c.max_proposals = 30;
    const auto r = anneal_structure(preset_target("CH"), Alphabet::ibm(), 4, CostKind::hst(), c);
    double best = 2.0;
    for (const auto &rec : r.trace) {
        best = std::min(best, rec.cost.value);
    }
    EXPECT_EQ(r.best_cost.value, best);
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        EXPECT_EQ(r.trace[i].iteration, i);
    }
}

TEST(Anneal, InnerOptimizersAllRun) {
    for (const auto inner : {InnerOptimizer::None, InnerOptimizer::Free, InnerOptimizer::Bisection,
                             InnerOptimizer::Gradient}) {
        auto c = exact_config(9);
        c.inner = inner;
        c.max_proposals = 10;
        c.max_iterations = 10;
        const auto r = anneal_structure(preset_target("T"), Alphabet::ibm(), 2, CostKind::hst(), c);
        EXPECT_FALSE(r.trace.empty()) << inner_optimizer_name(inner);
    }
}

TEST(Anneal, Deterministic) {
    auto c = exact_config(10);
    c.shots = 500;
    c.max_proposals = 20;
    c.tolerance = 1e-4;
    const auto a = anneal_structure(preset_target("H"), Alphabet::rigetti(), 3, CostKind::hst(), c);
    const auto b = anneal_structure(preset_target("H"), Alphabet::rigetti(), 3, CostKind::hst(), c);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        ASSERT_EQ(a.trace[i].cost.value, b.trace[i].cost.value);
        ASSERT_EQ(a.trace[i].sequence, b.trace[i].sequence);
    }
}

TEST(Anneal, RejectsEmptyStart) {
    EXPECT_THROW((void)anneal_structure(preset_target("T"), Alphabet::ibm(), 0, CostKind::hst(),
                                        OptimizerConfig{}),
                 ArgumentError);
}

TEST(Layered, ZeroSegmentIsPlainAnneal) {
    auto c = exact_config(11);
    c.max_proposals = 25;
    const auto a = anneal_structure(preset_target("CZ"), Alphabet::ibm(), 3, CostKind::hst(), c);
    const auto b = layered_refinement(preset_target("CZ"), Alphabet::ibm(), 0, 3, CostKind::hst(),
                                      c, 3);
    EXPECT_EQ(a.best_sequence, b.best_sequence);
    EXPECT_EQ(a.best_cost.value, b.best_cost.value);
    EXPECT_EQ(a.trace.size(), b.trace.size());
}

TEST(Layered, FreezesThePrefixAndKeepsTheBest) {
    auto c = exact_config(12);
    c.max_proposals = 15;
    c.compaction_proposals = 0;
    c.tolerance = 1e-9;
    const auto r = layered_refinement(preset_target("CH"), Alphabet::ibm(), 3, 3, CostKind::hst(), c);
    double best = 2.0;
    for (const auto &rec : r.trace) {
        best = std::min(best, rec.cost.value);
    }
    EXPECT_EQ(r.best_cost.value, best);
    // Every later-round record extends some earlier best by a segment, so lengths reach past 3.
    std::size_t longest = 0;
    for (const auto &rec : r.trace) {
        longest = std::max(longest, rec.sequence.size());
    }
    EXPECT_GT(longest, 3U);
}

TEST(Layered, ArgumentChecks) {
    OptimizerConfig c;
    EXPECT_THROW((void)layered_refinement(preset_target("T"), Alphabet::ibm(), 2, 0,
                                          CostKind::hst(), c),
                 ArgumentError);
    c.max_length = 1;
    EXPECT_THROW((void)layered_refinement(preset_target("T"), Alphabet::ibm(), 2, 1,
                                          CostKind::hst(), c),
                 ArgumentError);
}

} // namespace
