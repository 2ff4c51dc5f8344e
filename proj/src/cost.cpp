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
#include "qaqc/cost.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include "qaqc/errors.hpp"
#include "qaqc/noise.hpp"
#include "qaqc/rng.hpp"
#include "qaqc/serialize.hpp"
#include "qaqc/simulator.hpp"
#include "qaqc/transforms.hpp"

namespace qaqc {

namespace {

void check_pair(const GateSequence &u, const GateSequence &v) {
    if (u.num_qubits() != v.num_qubits()) {
        throw ArgumentError("U and V act on different numbers of qubits (" +
                            std::to_string(u.num_qubits()) + " vs " +
                            std::to_string(v.num_qubits()) + ")");
    }
    if (2 * u.num_qubits() > kMaxStateQubits) {
        throw CapacityError("two-copy circuit exceeds the simulator width");
    }
}

void append_bell_prep(GateSequence &c, int n) {
    for (int j = 0; j < n; ++j) {
        c.append(Gate(GateKind::H, j));
        c.append(Gate::cnot(j, n + j));
    }
}

void append_bell_unprep(GateSequence &c, int n, int j) {
    c.append(Gate::cnot(j, n + j));
    c.append(Gate(GateKind::H, j));
}

/// Bell prep, U on A and V* on B.
GateSequence two_copy_front(const GateSequence &u, const GateSequence &v) {
    const int n = u.num_qubits();
    GateSequence c(2 * n);
    append_bell_prep(c, n);
    c.append(u.shifted(0, 2 * n));
    c.append(conjugate_sequence(v).shifted(n, 2 * n));
    return c;
}

/// |Phi+> evolved by U on A and V* on B, built from prepare_bell directly.
StateVector two_copy_state(const GateSequence &u, const GateSequence &v) {
    const int n = u.num_qubits();
    StateVector state = prepare_bell(n);
    apply_sequence(state, u.shifted(0, 2 * n));
    apply_sequence(state, conjugate_sequence(v).shifted(n, 2 * n));
    return state;
}

/// Probability that pair (A_j, B_j) of `state` projects onto |Phi+>; j is 0-based.
double bell_pair_fidelity(const StateVector &state, int n, int j) {
    const auto amps = state.amplitudes();
    const std::size_t a = std::size_t{1} << j;
    const std::size_t b = std::size_t{1} << (n + j);
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & (a | b)) {
            continue;
        }
        total += std::norm(amps[i] + amps[i | a | b]);
    }
    return 0.5 * total;
}

std::vector<int> iota_qubits(int first, int count) {
    std::vector<int> qs(static_cast<std::size_t>(count));
    std::iota(qs.begin(), qs.end(), first);
    return qs;
}

/// Binomial estimate of P(outcome 0).
struct Frequency {
    double p;
    double std_error;
};

Frequency zero_frequency(const std::vector<std::uint64_t> &counts, std::uint64_t shots) {
    const double p = static_cast<double>(counts[0]) / static_cast<double>(shots);
    return {p, std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(shots))};
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

/// <Z> of qubit `q` from the exact state.
double exact_z(const StateVector &state, int q) { return 1.0 - 2.0 * state.probability_one(q); }

} // namespace

Backend reseeded(const Backend &b, std::uint64_t stream) {
    if (const auto *s = std::get_if<SampledBackend>(&b)) {
        SampledBackend out = *s;
        out.seed = derive_seed(s->seed, {stream});
        return out;
    }
    return b;
}

CostKind CostKind::parse(const std::string &name) {
    if (name == "hst") {
        return hst();
    }
    if (name == "lhst") {
        return lhst();
    }
    if (name == "potq") {
        return potq();
    }
    if (name == "fixed") {
        return fixed_input();
    }
    if (name == "fixed-local") {
        return fixed_input_local();
    }
    if (name.rfind("weighted:", 0) == 0) {
        const double q = parse_float(name.substr(9));
        if (!(q >= 0.0 && q <= 1.0)) {
            throw ArgumentError("weighted cost needs q in [0, 1]");
        }
        return weighted(q);
    }
    throw ArgumentError("unknown cost kind '" + name + "'");
}

std::string CostKind::name() const {
    switch (type) {
    case CostType::HST:
        return "hst";
    case CostType::LHST:
        return "lhst";
    case CostType::Weighted:
        return "weighted:" + format_double(q);
    case CostType::POTQ:
        return "potq";
    case CostType::FixedInput:
        return "fixed";
    case CostType::FixedInputLocal:
        return "fixed-local";
    }
    return "unknown";
}

GateSequence build_hst_circuit(const GateSequence &u, const GateSequence &v) {
    check_pair(u, v);
    const int n = u.num_qubits();
    GateSequence c = two_copy_front(u, v);
    for (int j = 0; j < n; ++j) {
        c.append(Gate::cnot(j, n + j));
    }
    for (int j = 0; j < n; ++j) {
        c.append(Gate(GateKind::H, j));
    }
    return c;
}

GateSequence build_lhst_circuit(const GateSequence &u, const GateSequence &v, int j) {
    check_pair(u, v);
    const int n = u.num_qubits();
    if (j < 1 || j > n) {
        throw IndexError("LHST pair index " + std::to_string(j) + " outside [1, " +
                         std::to_string(n) + "]");
    }
    GateSequence c = two_copy_front(u, v);
    append_bell_unprep(c, n, j - 1);
    return c;
}

GateSequence build_pooq_circuit(const GateSequence &u, Part part) {
    const int n = u.num_qubits();
    GateSequence c(n + 1);
    c.append(Gate(GateKind::H, n));
    c.append(controlled_sequence(u, n));
    if (part == Part::Imag) {
        c.append(Gate(GateKind::Sdg, n));
    }
    c.append(Gate(GateKind::H, n));
    return c;
}

GateSequence build_potq_circuit(const GateSequence &u, const GateSequence &v, Part part) {
    check_pair(u, v);
    const int n = u.num_qubits();
    const int width = 2 * n + 2;
    if (width > kMaxStateQubits) {
        throw CapacityError("POTQ circuit exceeds the simulator width");
    }
    const int q = 2 * n;
    const int qp = 2 * n + 1;
    GateSequence c(width);
    append_bell_prep(c, n);
    c.append(Gate(GateKind::H, q));
    c.append(Gate::cnot(q, qp));

    std::vector<int> map_a = iota_qubits(0, n);
    map_a.push_back(q);
    c.append(controlled_sequence(u, n).relabeled(map_a, width));

    std::vector<int> map_b = iota_qubits(n, n);
    map_b.push_back(qp);
    c.append(controlled_sequence(transpose_sequence(v), n, true).relabeled(map_b, width));

    c.append(Gate::cnot(q, qp));
    if (part == Part::Imag) {
        c.append(Gate(GateKind::Sdg, q));
    }
    c.append(Gate(GateKind::H, q));
    return c;
}

CostEstimate cost_hst(const GateSequence &u, const GateSequence &v, const Backend &backend) {
    check_pair(u, v);
    const int n = u.num_qubits();
    if (is_exact(backend)) {
        StateVector state = two_copy_state(u, v);
        for (int j = 0; j < n; ++j) {
            state.apply_cnot(j, n + j);
        }
        for (int j = 0; j < n; ++j) {
            apply_gate(state, Gate(GateKind::H, j));
        }
        const auto all = iota_qubits(0, 2 * n);
        return {clamp_unit(1.0 - prob_all_zero(state, all)), 0, 0.0};
    }
    const auto &s = std::get<SampledBackend>(backend);
    const auto all = iota_qubits(0, 2 * n);
    const auto counts = sample_circuit(build_hst_circuit(u, v), all, s.shots, s.seed, s.noise);
    const Frequency f = zero_frequency(counts, s.shots);
    return {1.0 - f.p, s.shots, f.std_error};
}

CostEstimate cost_lhst_j(const GateSequence &u, const GateSequence &v, int j,
                         const Backend &backend) {
    check_pair(u, v);
    const int n = u.num_qubits();
    if (j < 1 || j > n) {
        throw IndexError("LHST pair index " + std::to_string(j) + " outside [1, " +
                         std::to_string(n) + "]");
    }
    if (is_exact(backend)) {
        const StateVector state = two_copy_state(u, v);
        return {clamp_unit(1.0 - bell_pair_fidelity(state, n, j - 1)), 0, 0.0};
    }
    const auto &s = std::get<SampledBackend>(backend);
    const int pair[2] = {j - 1, n + j - 1};
    const auto counts =
        sample_circuit(build_lhst_circuit(u, v, j), pair, s.shots, s.seed, s.noise);
    const Frequency f = zero_frequency(counts, s.shots);
    return {1.0 - f.p, s.shots, f.std_error};
}

CostEstimate cost_lhst(const GateSequence &u, const GateSequence &v, const Backend &backend) {
    check_pair(u, v);
    const int n = u.num_qubits();
    if (is_exact(backend)) {
        const StateVector state = two_copy_state(u, v);
        double fidelity = 0.0;
        for (int j = 0; j < n; ++j) {
            fidelity += bell_pair_fidelity(state, n, j);
        }
        return {clamp_unit(1.0 - fidelity / n), 0, 0.0};
    }
    const auto &s = std::get<SampledBackend>(backend);
    const auto per = s.shots / static_cast<std::uint64_t>(n);
    const auto extra = s.shots % static_cast<std::uint64_t>(n);
    if (per == 0) {
        throw ArgumentError("LHST sampling needs at least one shot per qubit pair");
    }
    double total = 0.0;
    double variance = 0.0;
    for (int j = 1; j <= n; ++j) {
        SampledBackend sj = s;
        sj.shots = per + (static_cast<std::uint64_t>(j - 1) < extra ? 1 : 0);
        sj.seed = derive_seed(s.seed, {static_cast<std::uint64_t>(j)});
        const CostEstimate cj = cost_lhst_j(u, v, j, sj);
        total += cj.value;
        variance += cj.std_error * cj.std_error;
    }
    return {total / n, s.shots, std::sqrt(variance) / n};
}

CostEstimate cost_weighted(const GateSequence &u, const GateSequence &v, double q,
                           const Backend &backend) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw ArgumentError("weight q must lie in [0, 1]");
    }
    if (q == 1.0) {
        return cost_hst(u, v, backend);
    }
    if (q == 0.0) {
        return cost_lhst(u, v, backend);
    }
    const CostEstimate global = cost_hst(u, v, reseeded(backend, 1));
    const CostEstimate local = cost_lhst(u, v, reseeded(backend, 2));
    const double se = std::hypot(q * global.std_error, (1.0 - q) * local.std_error);
    return {q * global.value + (1.0 - q) * local.value, global.shots + local.shots, se};
}

ComplexEstimate potq_overlap(const GateSequence &u, const GateSequence &v,
                             const Backend &backend) {
    check_pair(u, v);
    const int q = 2 * u.num_qubits();
    ComplexEstimate out;
    double parts[2] = {0.0, 0.0};
    double errors[2] = {0.0, 0.0};
    for (int p = 0; p < 2; ++p) {
        const GateSequence circuit = build_potq_circuit(u, v, p == 0 ? Part::Real : Part::Imag);
        if (is_exact(backend)) {
            parts[p] = exact_z(simulate(circuit), q);
            continue;
        }
        const auto &s = std::get<SampledBackend>(backend);
        const int measured[1] = {q};
        const auto counts = sample_circuit(circuit, measured, s.shots,
                                           derive_seed(s.seed, {static_cast<std::uint64_t>(p)}),
                                           s.noise);
        const Frequency f = zero_frequency(counts, s.shots);
        parts[p] = 2.0 * f.p - 1.0;
        errors[p] = 2.0 * f.std_error;
        out.shots += s.shots;
    }
    out.value = {parts[0], parts[1]};
    out.std_error_real = errors[0];
    out.std_error_imag = errors[1];
    return out;
}

CostEstimate cost_potq(const GateSequence &u, const GateSequence &v, const Backend &backend) {
    check_pair(u, v);
    const int q = 2 * u.num_qubits();
    const GateSequence circuit = build_potq_circuit(u, v, Part::Real);
    if (is_exact(backend)) {
        return {std::clamp(1.0 - exact_z(simulate(circuit), q), 0.0, 2.0), 0, 0.0};
    }
    const auto &s = std::get<SampledBackend>(backend);
    const int measured[1] = {q};
    const auto counts = sample_circuit(circuit, measured, s.shots, s.seed, s.noise);
    const Frequency f = zero_frequency(counts, s.shots);
    return {2.0 - 2.0 * f.p, s.shots, 2.0 * f.std_error};
}

namespace {

GateSequence fixed_input_circuit(const GateSequence &u, const GateSequence &v) {
    if (u.num_qubits() != v.num_qubits()) {
        throw ArgumentError("U and V act on different numbers of qubits");
    }
    GateSequence c = u;
    c.append(inverse_sequence(v));
    return c;
}

} // namespace

CostEstimate cost_fixed_input(const GateSequence &u, const GateSequence &v,
                              const Backend &backend) {
    const GateSequence circuit = fixed_input_circuit(u, v);
    const auto all = iota_qubits(0, u.num_qubits());
    if (is_exact(backend)) {
        return {clamp_unit(1.0 - prob_all_zero(simulate(circuit), all)), 0, 0.0};
    }
    const auto &s = std::get<SampledBackend>(backend);
    const auto counts = sample_circuit(circuit, all, s.shots, s.seed, s.noise);
    const Frequency f = zero_frequency(counts, s.shots);
    return {1.0 - f.p, s.shots, f.std_error};
}

CostEstimate cost_fixed_input_local(const GateSequence &u, const GateSequence &v,
                                    const Backend &backend) {
    const GateSequence circuit = fixed_input_circuit(u, v);
    const int n = u.num_qubits();
    if (is_exact(backend)) {
        const StateVector state = simulate(circuit);
        double zeros = 0.0;
        for (int j = 0; j < n; ++j) {
            zeros += 1.0 - state.probability_one(j);
        }
        return {clamp_unit(1.0 - zeros / n), 0, 0.0};
    }
    const auto &s = std::get<SampledBackend>(backend);
    const auto all = iota_qubits(0, n);
    const auto counts = sample_circuit(circuit, all, s.shots, s.seed, s.noise);
    // Per-shot statistic: fraction of qubits that read 1.
    double mean = 0.0;
    double mean_sq = 0.0;
    for (std::size_t outcome = 0; outcome < counts.size(); ++outcome) {
        if (counts[outcome] == 0) {
            continue;
        }
        const double frac = static_cast<double>(std::popcount(outcome)) / n;
        const double w = static_cast<double>(counts[outcome]) / static_cast<double>(s.shots);
        mean += w * frac;
        mean_sq += w * frac * frac;
    }
    const double var = std::max(mean_sq - mean * mean, 0.0);
    return {mean, s.shots, std::sqrt(var / static_cast<double>(s.shots))};
}

CostEstimate evaluate_cost(const CostKind &kind, const GateSequence &u, const GateSequence &v,
                           const Backend &backend) {
    switch (kind.type) {
    case CostType::HST:
        return cost_hst(u, v, backend);
    case CostType::LHST:
        return cost_lhst(u, v, backend);
    case CostType::Weighted:
        return cost_weighted(u, v, kind.q, backend);
    case CostType::POTQ:
        return cost_potq(u, v, backend);
    case CostType::FixedInput:
        return cost_fixed_input(u, v, backend);
    case CostType::FixedInputLocal:
        return cost_fixed_input_local(u, v, backend);
    }
    throw ArgumentError("unknown cost kind");
}

ComplexEstimate trace_via_pooq(const GateSequence &u, const Backend &backend) {
    const int n = u.num_qubits();
    if (n + 1 > kMaxStateQubits) {
        throw CapacityError("POOQ circuit exceeds the simulator width");
    }
    const std::uint64_t d = std::uint64_t{1} << n;
    const GateSequence circuits[2] = {build_pooq_circuit(u, Part::Real),
                                      build_pooq_circuit(u, Part::Imag)};
    ComplexEstimate out;
    double parts[2] = {0.0, 0.0};
    double errors[2] = {0.0, 0.0};

    if (is_exact(backend)) {
        constexpr int kExactInputLimit = 6;
        constexpr std::uint64_t kSampledInputs = 4096;
        for (int p = 0; p < 2; ++p) {
            if (n <= kExactInputLimit) {
                double sum = 0.0;
                for (std::uint64_t b = 0; b < d; ++b) {
                    sum += exact_z(simulate(circuits[p], b), n);
                }
                parts[p] = sum / static_cast<double>(d);
            } else {
                // Too many inputs to enumerate; average a fixed pseudo-random subset.
                Rng rng(derive_seed(0x504F4F51ULL, {static_cast<std::uint64_t>(p)}));
                double sum = 0.0;
                double sum_sq = 0.0;
                for (std::uint64_t k = 0; k < kSampledInputs; ++k) {
                    const double z = exact_z(simulate(circuits[p], rng.uniform_int(d)), n);
                    sum += z;
                    sum_sq += z * z;
                }
                const double mean = sum / kSampledInputs;
                parts[p] = mean;
                errors[p] = std::sqrt(std::max(sum_sq / kSampledInputs - mean * mean, 0.0) /
                                      kSampledInputs);
            }
        }
    } else {
        const auto &s = std::get<SampledBackend>(backend);
        const bool gate_noise = s.noise && s.noise->has_gate_noise();
        const int measured[1] = {n};
        for (int p = 0; p < 2; ++p) {
            Rng rng(derive_seed(s.seed, {static_cast<std::uint64_t>(p)}));
            std::map<std::uint64_t, double> p0_cache;
            std::uint64_t zeros = 0;
            for (std::uint64_t shot = 0; shot < s.shots; ++shot) {
                const std::uint64_t input = rng.uniform_int(d);
                if (gate_noise) {
                    const auto c = sample_circuit(circuits[p], measured, 1, rng.next_u64(),
                                                  s.noise, input);
                    zeros += c[0];
                    continue;
                }
                auto it = p0_cache.find(input);
                if (it == p0_cache.end()) {
                    const double p1 = simulate(circuits[p], input).probability_one(n);
                    it = p0_cache.emplace(input, 1.0 - p1).first;
                }
                bool one = !(rng.uniform() < it->second);
                if (s.noise) {
                    const double flip = one ? s.noise->readout_flip1 : s.noise->readout_flip0;
                    if (rng.uniform() < flip) {
                        one = !one;
                    }
                }
                zeros += one ? 0 : 1;
            }
            const Frequency f = zero_frequency({zeros}, s.shots);
            parts[p] = 2.0 * f.p - 1.0;
            errors[p] = 2.0 * f.std_error;
            out.shots += s.shots;
        }
    }
    const double scale = static_cast<double>(d);
    out.value = {scale * parts[0], scale * parts[1]};
    out.std_error_real = scale * errors[0];
    out.std_error_imag = scale * errors[1];
    return out;
}

RealEstimate trace_via_lhst(const GateSequence &u_prime, const Backend &backend) {
    const int n = u_prime.num_qubits();
    const GateSequence u1 = u_prime;
    const GateSequence u2 = controlled_sequence(u_prime, n);
    const CostEstimate c1 = cost_lhst(u1, GateSequence(n), reseeded(backend, 1));
    const CostEstimate c2 = cost_lhst(u2, GateSequence(n + 1), reseeded(backend, 2));
    const double b1 = 1.0 - c1.value;
    const double b2 = 1.0 - c2.value;
    const double d = std::ldexp(1.0, n);
    RealEstimate out;
    out.value = d * ((n + 1) * (2.0 * b2 - 1.0) - n * b1);
    out.std_error = d * std::hypot(2.0 * (n + 1) * c2.std_error, n * c1.std_error);
    out.shots = c1.shots + c2.shots;
    return out;
}

double avg_fidelity_from_hst(double c_hst, int n) {
    const double d = std::ldexp(1.0, n);
    return 1.0 - (d / (d + 1.0)) * c_hst;
}

double fidelity_bound_from_cq(double c_q, int n, double q) {
    const double d = std::ldexp(1.0, n);
    return 1.0 - (n / (1.0 - q + n * q)) * (d / (d + 1.0)) * c_q;
}

double epsilon_from_cost(const CostKind &kind, double cost, int n) {
    const double d = std::ldexp(1.0, n);
    const double ratio = d / (d + 1.0);
    switch (kind.type) {
    case CostType::HST:
        return ratio * cost;
    case CostType::LHST:
    case CostType::Weighted:
        return 1.0 - fidelity_bound_from_cq(cost, n, kind.type == CostType::LHST ? 0.0 : kind.q);
    case CostType::POTQ: {
        // |Tr|/d >= Re Tr/d = 1 - c bounds C_HST by 1 - (1 - c)^2 while c <= 1.
        const double c_hst = cost >= 1.0 ? 1.0 : 1.0 - (1.0 - cost) * (1.0 - cost);
        return ratio * c_hst;
    }
    case CostType::FixedInput:
    case CostType::FixedInputLocal:
        return std::numeric_limits<double>::quiet_NaN();
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace qaqc
