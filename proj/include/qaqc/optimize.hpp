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
 * Continuous optimizers over the angles of a fixed gate structure.
 *
 * Every optimizer is deterministic given OptimizerConfig::seed: sampled cost
 * evaluations draw their seeds from a per-optimizer counter, never from
 * global state.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qaqc/cost.hpp"
#include "qaqc/rng.hpp"
#include "qaqc/sequence.hpp"

namespace qaqc {

struct AnnealingSchedule {
    double initial_temperature = 0.2;
    double cooling_ratio = 0.9;

    /// T_k = T0 * r^k.
    [[nodiscard]] double temperature(std::uint64_t accepted) const;
};

/// Continuous optimizer run on every structure proposal.
enum class InnerOptimizer { None, Free, Bisection, Gradient };

[[nodiscard]] std::string inner_optimizer_name(InnerOptimizer inner);
/// Parses "none", "free", "bisection" or "gradient".
[[nodiscard]] InnerOptimizer parse_inner_optimizer(const std::string &name);

struct OptimizerConfig {
    /// Cost threshold, or squared-gradient threshold for the gradient optimizer.
    double tolerance = 1e-3;
    /// Restarts from fresh random angles.
    int max_restarts = 1;
    /// Objective calls per restart (free search), gradient steps, or proposals per bisection level.
    int max_iterations = 50;
    /// Shots per cost evaluation; 0 selects the exact backend.
    std::uint64_t shots = 0;
    double learning_rate = 1.0;
    int bisection_levels = 6;
    /// Fine-pass step for level t = 0..bisection_levels; empty means pi / 2^(t+3).
    std::vector<double> fine_delta;
    AnnealingSchedule annealing;
    std::uint64_t seed = 0;
    /// Gate and readout noise of the sampled backend.
    std::optional<NoiseModel> noise;
    std::string search = "nelder-mead";

    // Structure search.
    int max_proposals = 200;
    /// Circuit depth cap on proposals; 0 disables it.
    int max_depth = 0;
    /// Sequence length cap on proposals; 0 disables it.
    int max_length = 0;
    /// Extra proposals spent shortening a sequence once it meets the tolerance.
    int compaction_proposals = 64;
    InnerOptimizer inner = InnerOptimizer::Free;

    /// Throws ArgumentError naming the first invalid field.
    void validate() const;
    [[nodiscard]] double fine_delta_at(int level) const;
    [[nodiscard]] Backend backend() const;
};

struct TraceRecord {
    std::uint64_t iteration = 0;
    CostEstimate cost;
    std::optional<double> gradient_norm;
    std::optional<double> learning_rate;
    std::uint64_t structure_hash = 0;
    bool accepted = false;
    std::vector<double> angles;
    /// The evaluated sequence, so later analyses can re-score it.
    GateSequence sequence;
};

using ConvergenceTrace = std::vector<TraceRecord>;

struct CompilationResult {
    GateSequence best_sequence;
    CostEstimate best_cost;
    double epsilon_approx = 0.0;
    ConvergenceTrace trace;
    bool converged = false;
    std::string stop_reason;
};

/**
 * Cost of candidate sequences against a fixed target. Sampled evaluations are
 * seeded with derive_seed(seed, {stream, call}) so repeated calls see fresh
 * shot noise while the whole run stays reproducible.
 */
class CostEvaluator {
  public:
    CostEvaluator(GateSequence target, CostKind kind, Backend backend, std::uint64_t stream = 0);

    CostEstimate operator()(const GateSequence &v);
    /// Backend for the next call, advancing the counter.
    Backend next_backend();

    [[nodiscard]] const GateSequence &target() const noexcept { return target_; }
    [[nodiscard]] const CostKind &kind() const noexcept { return kind_; }
    [[nodiscard]] std::uint64_t calls() const noexcept { return calls_; }

  private:
    GateSequence target_;
    CostKind kind_;
    Backend backend_;
    std::uint64_t stream_;
    std::uint64_t calls_ = 0;
};

/// Metropolis rule: always accept when delta <= 0, else with probability exp(-delta / T).
bool metropolis_accept(double delta, double temperature, Rng &rng);

/**
 * Derivative-free search from random angles, restarted up to max_restarts
 * times, each restart spending max_iterations cost evaluations. Stops early
 * once the cost is at or below the tolerance.
 */
CompilationResult optimize_continuous_free(const GateSequence &u, const GateSequence &v_structure,
                                           const CostKind &kind, const OptimizerConfig &config);

/**
 * Multi-scale bisection over Rz angles. Level 0 anneals over {0, pi/2, pi,
 * 3pi/2}; level t moves one angle by +-pi/2^(t+1); each level ends with a
 * greedy fine pass of +-fine_delta_at(t). Throws UnsupportedGateError if any
 * free angle belongs to a gate other than Rz.
 */
CompilationResult optimize_bisection(const GateSequence &u, const GateSequence &v_structure,
                                     const OptimizerConfig &config,
                                     const CostKind &kind = CostKind::hst());

/**
 * Parameter-shift gradient, one entry per free angle:
 * dC/da = (C(a + pi/2) - C(a - pi/2)) / 2. Valid for every cost except POTQ,
 * whose phase sensitivity needs gradient_potq.
 */
std::vector<double> gradient_shift(const GateSequence &u, const GateSequence &v,
                                   const CostKind &kind, const Backend &backend);

/// dC_POTQ/da = -(1 - C_POTQ(U, V~)) / 2, where V~ has R_P(pi) = -iP inserted after the gate.
std::vector<double> gradient_potq(const GateSequence &u, const GateSequence &v,
                                  const Backend &backend);

/**
 * Gradient descent. For POTQ: plain steps of learning_rate, max_iterations
 * per restart. Otherwise the adaptive-step two-point lookahead, stopping
 * after four consecutive squared gradient norms at or below the tolerance or
 * after max_iterations steps; the result is the final iterate.
 */
CompilationResult optimize_gradient(const GateSequence &u, const GateSequence &v_structure,
                                    const CostKind &kind, const OptimizerConfig &config);

/// Same as optimize_gradient but starting from the angles already in `v_start`.
CompilationResult optimize_gradient_from(const GateSequence &u, const GateSequence &v_start,
                                         const CostKind &kind, const OptimizerConfig &config);

/// Same as optimize_continuous_free but the first restart starts from `v_start`'s angles.
CompilationResult optimize_continuous_free_from(const GateSequence &u,
                                                const GateSequence &v_start,
                                                const CostKind &kind,
                                                const OptimizerConfig &config);

} // namespace qaqc
