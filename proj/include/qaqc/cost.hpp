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
/**
 * @file
 * Test circuits and cost estimators.
 *
 * Register layout of the two-copy circuits for an n-qubit target: A_j is qubit
 * j-1 and B_j is qubit n+j-1 (j = 1..n). The POTQ circuit adds the ancillas
 * Q = 2n and Q' = 2n+1; the POOQ circuit puts its ancilla at qubit n.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "qaqc/noise_model.hpp"
#include "qaqc/sequence.hpp"

namespace qaqc {

/// Probabilities computed from the statevector, no sampling error.
struct ExactBackend {};

/// Shot-sampled estimates, optionally with stochastic noise.
struct SampledBackend {
    std::uint64_t shots = 1000;
    std::uint64_t seed = 0;
    std::optional<NoiseModel> noise;
};

using Backend = std::variant<ExactBackend, SampledBackend>;

[[nodiscard]] inline bool is_exact(const Backend &b) {
    return std::holds_alternative<ExactBackend>(b);
}
/// Same backend with its seed replaced by derive_seed(seed, {stream}).
[[nodiscard]] Backend reseeded(const Backend &b, std::uint64_t stream);

struct CostEstimate {
    double value = 0.0;
    std::uint64_t shots = 0; ///< 0 for the exact backend.
    double std_error = 0.0;
};

/// Real-valued estimate, e.g. a trace.
struct RealEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t shots = 0;
};

/// Complex estimate with independent standard errors on each part.
struct ComplexEstimate {
    std::complex<double> value;
    double std_error_real = 0.0;
    double std_error_imag = 0.0;
    std::uint64_t shots = 0;
};

enum class CostType { HST, LHST, Weighted, POTQ, FixedInput, FixedInputLocal };

struct CostKind {
    CostType type = CostType::HST;
    double q = 1.0; ///< Weight of the global term; used by Weighted only.

    static CostKind hst() { return {CostType::HST, 1.0}; }
    static CostKind lhst() { return {CostType::LHST, 0.0}; }
    static CostKind weighted(double q) { return {CostType::Weighted, q}; }
    /// q = 1 up to four qubits, q = 0 from five on.
    static CostKind weighted_default(int n) { return weighted(n <= 4 ? 1.0 : 0.0); }
    static CostKind potq() { return {CostType::POTQ, 1.0}; }
    static CostKind fixed_input() { return {CostType::FixedInput, 1.0}; }
    static CostKind fixed_input_local() { return {CostType::FixedInputLocal, 1.0}; }
    /// Parses "hst", "lhst", "weighted:<q>", "potq", "fixed", "fixed-local".
    static CostKind parse(const std::string &name);

    [[nodiscard]] std::string name() const;
    friend bool operator==(const CostKind &, const CostKind &) = default;
};

enum class Part { Real, Imag };

GateSequence build_hst_circuit(const GateSequence &u, const GateSequence &v);
/// j is 1-based.
GateSequence build_lhst_circuit(const GateSequence &u, const GateSequence &v, int j);
GateSequence build_pooq_circuit(const GateSequence &u, Part part);
GateSequence build_potq_circuit(const GateSequence &u, const GateSequence &v, Part part);

/// 1 - |Tr(V^dagger U)|^2 / d^2.
CostEstimate cost_hst(const GateSequence &u, const GateSequence &v, const Backend &backend);
/// 1 - F_e^(j) for the pair (A_j, B_j); j is 1-based.
CostEstimate cost_lhst_j(const GateSequence &u, const GateSequence &v, int j,
                         const Backend &backend);
/// Mean of the n per-pair costs. Sampled shots are split equally, remainder to low j.
CostEstimate cost_lhst(const GateSequence &u, const GateSequence &v, const Backend &backend);
/// q C_HST + (1 - q) C_LHST; each term gets the full shot budget.
CostEstimate cost_weighted(const GateSequence &u, const GateSequence &v, double q,
                           const Backend &backend);
/// 1 - Re Tr(V^dagger U) / d, in [0, 2].
CostEstimate cost_potq(const GateSequence &u, const GateSequence &v, const Backend &backend);
/// 1 - |<0|V^dagger U|0>|^2 on an n-qubit circuit.
CostEstimate cost_fixed_input(const GateSequence &u, const GateSequence &v,
                              const Backend &backend);
/// 1 - (1/n) sum_j P(qubit j reads 0) after U then V^dagger.
CostEstimate cost_fixed_input_local(const GateSequence &u, const GateSequence &v,
                                    const Backend &backend);

CostEstimate evaluate_cost(const CostKind &kind, const GateSequence &u, const GateSequence &v,
                           const Backend &backend);

/// Tr(V^dagger U) / d from the POTQ ancilla statistics.
ComplexEstimate potq_overlap(const GateSequence &u, const GateSequence &v,
                             const Backend &backend);
/// Tr(U) from the one-clean-qubit circuit with a maximally mixed register.
ComplexEstimate trace_via_pooq(const GateSequence &u, const Backend &backend);
/// Re Tr(U') from two LHST evaluations (of U' and of controlled-U').
RealEstimate trace_via_lhst(const GateSequence &u_prime, const Backend &backend);

/// Haar-average fidelity implied by a C_HST value.
double avg_fidelity_from_hst(double c_hst, int n);
/// Lower bound on the average fidelity implied by a C_q value.
double fidelity_bound_from_cq(double c_q, int n, double q);
/**
 * epsilon of the epsilon-approximate compilation certified by `cost`. NaN for
 * the fixed-input costs, which certify nothing about other inputs.
 */
double epsilon_from_cost(const CostKind &kind, double cost, int n);

} // namespace qaqc
