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

#include <cmath>
#include <random>
#include <vector>

#include "qaqc/errors.hpp"
#include "qaqc/simulator.hpp"
#include "qaqc/state_vector.hpp"
#include "qaqc/unitary.hpp"
#include "test_util.hpp"

namespace {

using namespace qaqc;
using qaqc::ref::kPi;
using qaqc::ref::Mat;

TEST(StateVector, StartsInZeroState) {
    StateVector s(3);
    ASSERT_EQ(s.size(), 8U);
    EXPECT_EQ(s[0], Complex(1.0));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, RejectsBadWidths) {
    EXPECT_THROW(StateVector(0), CapacityError);
    EXPECT_THROW(StateVector(kMaxStateQubits + 1), CapacityError);
    EXPECT_THROW(StateVector::basis(2, 4), IndexError);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), ArgumentError);
}

TEST(StateVector, BadQubitIndicesThrow) {
    StateVector s(2);
    EXPECT_THROW(s.apply_x(2), IndexError);
    EXPECT_THROW(s.apply_cnot(0, 0), ArgumentError);
    EXPECT_THROW(apply_gate(s, Gate(GateKind::H, 5)), IndexError);
}

TEST(PrepareBell, OneQubitPair) {
    const auto s = prepare_bell(1);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s[0] - r), 0.0, 1e-15);
    EXPECT_EQ(s[1], Complex(0.0));
    EXPECT_EQ(s[2], Complex(0.0));
    EXPECT_NEAR(std::abs(s[3] - r), 0.0, 1e-15);
}

TEST(PrepareBell, AmplitudesWhereRegistersAgree) {
    for (int n = 2; n <= 3; ++n) {
        const auto s = prepare_bell(n);
        const std::size_t d = std::size_t{1} << n;
        int nonzero = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const bool agree = (i & (d - 1)) == (i >> n);
            if (agree) {
                EXPECT_NEAR(std::abs(s[i] - 1.0 / std::sqrt(double(d))), 0.0, 1e-15);
                ++nonzero;
            } else {
                EXPECT_EQ(s[i], Complex(0.0));
            }
        }
        EXPECT_EQ(nonzero, static_cast<int>(d));
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    }
}

TEST(ApplyGate, XFlipsZero) {
    StateVector s(1);
    apply_gate(s, Gate(GateKind::X, 0));
    EXPECT_EQ(s[1], Complex(1.0));
    EXPECT_EQ(s[0], Complex(0.0));
}

TEST(ApplyGate, RzOnZeroIsAPhase) {
    StateVector s(1);
    apply_gate(s, Gate::rz(0, 0.7));
    EXPECT_NEAR(std::abs(s[0] - std::polar(1.0, -0.35)), 0.0, 1e-15);
}

TEST(ApplyGate, CnotMakesBellState) {
    const double r = 1.0 / std::sqrt(2.0);
    // Kets written |q0 q1>: (|00> + |10>)/sqrt2 is indices 0 and 1.
    auto s = StateVector::from_amplitudes({r, r, 0.0, 0.0});
    apply_gate(s, Gate::cnot(0, 1));
    EXPECT_NEAR(std::abs(s[0] - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s[3] - r), 0.0, 1e-15);
    EXPECT_EQ(s[1], Complex(0.0));
    EXPECT_EQ(s[2], Complex(0.0));
}

TEST(ApplyGate, MatchesOracleOnEveryBasisState) {
    std::mt19937_64 gen(1);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 4;
        const auto seq = ref::random_sequence(n, 12, gen);
        const Mat u = ref::sequence_oracle(seq);
        for (std::uint64_t b = 0; b < (1U << n); ++b) {
            const auto s = simulate(seq, b);
            for (std::size_t i = 0; i < s.size(); ++i) {
                ASSERT_NEAR(std::abs(s[i] - u(Eigen::Index(i), Eigen::Index(b))), 0.0, 1e-10);
            }
        }
    }
}

TEST(ApplyGate, NormPreservedOverLongCircuits) {
    std::mt19937_64 gen(2);
    const auto seq = ref::random_sequence(5, 10000, gen);
    const auto s = simulate(seq);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-8);
}

TEST(ApplyGate, FixedTwoQubitLocalIndexOrder) {
    // |q0=1, q1=0> -> |q0=0, q1=1> for the matrix swapping local indices 1 and 2.
    Matrix4 swap{};
    swap[0] = swap[4 * 1 + 2] = swap[4 * 2 + 1] = swap[15] = 1.0;
    StateVector s = StateVector::basis(3, 0b001);
    apply_gate(s, Gate::fixed(swap, 0, 2));
    EXPECT_EQ(s[0b100], Complex(1.0));
}

TEST(ProbAllZero, SimpleStates) {
    StateVector zero(1);
    const int q0[] = {0};
    EXPECT_DOUBLE_EQ(prob_all_zero(zero, q0), 1.0);
    const auto bell = prepare_bell(1);
    const int both[] = {0, 1};
    EXPECT_NEAR(prob_all_zero(bell, both), 0.5, 1e-15);
}

TEST(ProbAllZero, MatchesPartialTraceOracle) {
    const auto psi = haar_random_state(3, 17);
    Mat rho(8, 8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            rho(i, j) = psi[std::size_t(i)] * std::conj(psi[std::size_t(j)]);
        }
    }
    const Mat reduced = ref::partial_trace_keep(rho, 1);
    const int q[] = {1};
    EXPECT_NEAR(prob_all_zero(psi, q), reduced(0, 0).real(), 1e-12);
}

TEST(ProbAllZero, RejectsDuplicateQubits) {
    StateVector s(2);
    const int dup[] = {0, 0};
    EXPECT_THROW((void)prob_all_zero(s, dup), ArgumentError);
}

TEST(Sampling, ZeroStateAlwaysZero) {
    StateVector s(1);
    const int q[] = {0};
    const auto counts = sample_counts(s, q, 1000, 3);
    EXPECT_EQ(counts[0], 1000U);
    EXPECT_EQ(counts[1], 0U);
}

TEST(Sampling, PlusStateBinomial) {
    const double r = 1.0 / std::sqrt(2.0);
    const auto s = StateVector::from_amplitudes({r, r});
    const int q[] = {0};
    const auto counts = sample_counts(s, q, 10000, 4);
    EXPECT_NEAR(counts[0] / 1e4, 0.5, 0.015);
}

TEST(Sampling, ReadoutFlipRate) {
    StateVector s(1);
    const int q[] = {0};
    NoiseModel m;
    m.readout_flip0 = 0.1;
    const auto counts = sample_counts(s, q, 10000, 5, m);
    EXPECT_NEAR(counts[1] / 1e4, 0.1, 0.01);
}

TEST(Sampling, FrequenciesConvergeToMarginals) {
    const auto psi = haar_random_state(4, 8);
    const int q[] = {0, 2};
    const auto dist = marginal_distribution(psi, q);
    constexpr std::uint64_t kShots = 40000;
    const auto counts = sample_counts(psi, q, kShots, 6);
    for (std::size_t k = 0; k < dist.size(); ++k) {
        const double sigma = std::sqrt(dist[k] * (1 - dist[k]) / kShots);
        EXPECT_NEAR(double(counts[k]) / kShots, dist[k], 3.0 * sigma + 1e-12);
    }
    EXPECT_NEAR(dist[0], prob_all_zero(psi, q), 1e-12);
}

TEST(Sampling, BitstringsAgreeWithCounts) {
    const auto psi = haar_random_state(2, 9);
    const int q[] = {1, 0};
    const auto counts = sample_counts(psi, q, 500, 10);
    const auto samples = sample_bitstrings(psi, q, 500, 10);
    std::uint64_t total = 0;
    for (const auto &s : samples) {
        const std::size_t outcome = s.bits[0] + 2U * s.bits[1];
        EXPECT_EQ(counts[outcome], s.count);
        total += s.count;
    }
    EXPECT_EQ(total, 500U);
}

TEST(HaarState, FirstMomentMatches) {
    constexpr int kSamples = 100000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        const auto s = haar_random_state(3, 1000 + std::uint64_t(i));
        const double p = std::norm(s[0]);
        sum += p;
        sum2 += p * p;
    }
    const double mean = sum / kSamples;
    const double sigma = std::sqrt((sum2 / kSamples - mean * mean) / kSamples);
    EXPECT_NEAR(mean, 1.0 / 8.0, 3.0 * sigma);
}

TEST(HaarUnitary, UnitaryAndSeedDependent) {
    const auto a = haar_random_unitary(1, 1);
    const auto b = haar_random_unitary(1, 2);
    EXPECT_LT(a.unitarity_error(), 1e-9);
    EXPECT_LT(b.unitarity_error(), 1e-9);
    EXPECT_GT((a.matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-3);
    const auto c = haar_random_unitary(2, 3);
    EXPECT_NEAR(std::abs(c.matrix().determinant()), 1.0, 1e-9);
}

TEST(UnitaryMatrix, RejectsNonUnitary) {
    Mat m = Mat::Identity(2, 2);
    m(0, 1) = 0.5;
    EXPECT_THROW(UnitaryMatrix{m}, ArgumentError);
    EXPECT_THROW(UnitaryMatrix{Mat::Identity(3, 3)}, ArgumentError);
    EXPECT_THROW(UnitaryMatrix(kMaxMatrixQubits + 1), CapacityError);
}

TEST(PhaseAlignedDistance, IgnoresGlobalPhase) {
    const auto u = haar_random_unitary(2, 4).matrix();
    const Mat v = std::polar(1.0, 1.234) * u;
    EXPECT_LT(phase_aligned_distance(u, v), 1e-12);
    EXPECT_GT(phase_aligned_distance(u, Mat::Identity(4, 4)), 1e-3);
}

TEST(Embed, MatchesOracle) {
    const Gate h(GateKind::H, 1);
    EXPECT_LT((embed_1q(h.matrix2(), 1, 3) - ref::gate_oracle(h, 3)).cwiseAbs().maxCoeff(),
              1e-15);
    const Gate cx = Gate::cnot(2, 0);
    EXPECT_LT((embed_2q(cx.matrix4(), 2, 0, 3) - ref::gate_oracle(cx, 3)).cwiseAbs().maxCoeff(),
              1e-15);
}

} // namespace
