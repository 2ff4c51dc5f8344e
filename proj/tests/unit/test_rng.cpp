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

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <vector>

#include "qaqc/rng.hpp"

namespace {

using qaqc::Rng;

// Known-answer vectors published with the Random123 reference implementation.
TEST(Philox, KnownAnswerZero) {
    const auto out = qaqc::philox4x32_10({0, 0, 0, 0}, {0, 0});
    const std::array<std::uint32_t, 4> expected = {0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8};
    EXPECT_EQ(out, expected);
}

TEST(Philox, KnownAnswerAllOnes) {
    const auto out = qaqc::philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                                         {0xffffffff, 0xffffffff});
    const std::array<std::uint32_t, 4> expected = {0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd};
    EXPECT_EQ(out, expected);
}

TEST(Philox, KnownAnswerPi) {
    const auto out = qaqc::philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                                         {0xa4093822, 0x299f31d0});
    const std::array<std::uint32_t, 4> expected = {0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1};
    EXPECT_EQ(out, expected);
}

TEST(Rng, SameSeedSameStream) {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
    }
}

TEST(Rng, DifferentSeedsDiffer) {
    Rng a(1);
    Rng b(2);
    int equal = 0;
    for (int i = 0; i < 100; ++i) {
        equal += a.next_u64() == b.next_u64();
    }
    EXPECT_EQ(equal, 0);
}

TEST(Rng, UniformInUnitInterval) {
    Rng rng(7);
    double sum = 0.0;
    constexpr int kN = 100000;
    for (int i = 0; i < kN; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    // Mean 1/2, variance 1/12.
    EXPECT_NEAR(sum / kN, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / kN));
}

TEST(Rng, UniformIntCoversRangeEvenly) {
    Rng rng(3);
    std::array<int, 6> counts{};
    constexpr int kN = 60000;
    for (int i = 0; i < kN; ++i) {
        const auto k = rng.uniform_int(6);
        ASSERT_LT(k, 6U);
        ++counts[k];
    }
    const double p = 1.0 / 6.0;
    for (const int c : counts) {
        EXPECT_NEAR(c, kN * p, 4.0 * std::sqrt(kN * p * (1 - p)));
    }
}

TEST(Rng, NormalMoments) {
    Rng rng(11);
    constexpr int kN = 100000;
    double s1 = 0.0;
    double s2 = 0.0;
    for (int i = 0; i < kN; ++i) {
        const double x = rng.normal();
        s1 += x;
        s2 += x * x;
    }
    EXPECT_NEAR(s1 / kN, 0.0, 4.0 / std::sqrt(kN));
    // Var(x^2) = 2 for a standard normal.
    EXPECT_NEAR(s2 / kN, 1.0, 4.0 * std::sqrt(2.0 / kN));
}

TEST(Rng, BinomialMeanAndEdges) {
    Rng rng(5);
    EXPECT_EQ(rng.binomial(100, 0.0), 0U);
    EXPECT_EQ(rng.binomial(100, 1.0), 100U);
    constexpr int kReps = 2000;
    double total = 0.0;
    for (int i = 0; i < kReps; ++i) {
        total += static_cast<double>(rng.binomial(1000, 0.3));
    }
    const double sigma = std::sqrt(1000 * 0.3 * 0.7 / kReps);
    EXPECT_NEAR(total / kReps, 300.0, 4.0 * sigma);
}

TEST(Rng, SatisfiesUniformRandomBitGenerator) {
    Rng rng(9);
    std::vector<int> v = {1, 2, 3, 4, 5, 6, 7, 8};
    std::shuffle(v.begin(), v.end(), rng);
    std::sort(v.begin(), v.end());
    EXPECT_EQ(v, (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(DeriveSeed, DeterministicAndStreamSensitive) {
    EXPECT_EQ(qaqc::derive_seed(1, {2, 3}), qaqc::derive_seed(1, {2, 3}));
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 50; ++s) {
        for (std::uint64_t t = 0; t < 50; ++t) {
            seen.insert(qaqc::derive_seed(s, {t}));
        }
    }
    EXPECT_EQ(seen.size(), 2500U);
    EXPECT_NE(qaqc::derive_seed(1, {2, 3}), qaqc::derive_seed(1, {3, 2}));
    EXPECT_NE(qaqc::derive_seed(1, {0}), qaqc::derive_seed(1, {0, 0}));
}

} // namespace
