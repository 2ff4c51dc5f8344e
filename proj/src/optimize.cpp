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
#include "qaqc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "qaqc/errors.hpp"
#include "qaqc/parallel.hpp"
#include "qaqc/search.hpp"

namespace qaqc {

namespace {

using std::numbers::pi;

// Stream tags keep the evaluators of different optimizers apart.
constexpr std::uint64_t kFreeStream = 0x46524545;
constexpr std::uint64_t kBisectStream = 0x42495345;
constexpr std::uint64_t kGradStream = 0x47524144;
constexpr std::uint64_t kAngleStream = 0x414e474c;

std::vector<double> random_angles(std::size_t count, Rng &rng) {
    std::vector<double> out(count);
    for (auto &a : out) {
        a = 2.0 * pi * rng.uniform();
    }
    return out;
}

TraceRecord make_record(std::uint64_t iteration, const CostEstimate &cost,
                        const GateSequence &seq, bool accepted) {
    TraceRecord r;
    r.iteration = iteration;
    r.cost = cost;
    r.structure_hash = seq.structure_hash();
    r.accepted = accepted;
    r.angles = seq.parameters();
    r.sequence = seq;
    return r;
}

CompilationResult finish(const CostKind &kind, GateSequence best, CostEstimate cost,
                         ConvergenceTrace trace, bool converged, std::string reason) {
    CompilationResult result;
    result.epsilon_approx = epsilon_from_cost(kind, cost.value, best.num_qubits());
    result.best_sequence = std::move(best);
    result.best_cost = cost;
    result.trace = std::move(trace);
    result.converged = converged;
    result.stop_reason = std::move(reason);
    return result;
}

double norm_squared(const std::vector<double> &g) {
    double s = 0.0;
    for (const double x : g) {
        s += x * x;
    }
    return s;
}

CompilationResult free_search(const GateSequence &u, const GateSequence &v,
                              const std::vector<double> *warm, const CostKind &kind,
                              const OptimizerConfig &config) {
    config.validate();
    CostEvaluator eval(u, kind, config.backend(), kFreeStream);
    const std::size_t dim = v.num_parameters();
    ConvergenceTrace trace;

    GateSequence best_seq = v;
    CostEstimate best_cost{2.0, 0, 0.0};
    auto score = [&](const GateSequence &cand) {
        const CostEstimate c = eval(cand);
        const bool better = c.value < best_cost.value;
        if (better) {
            best_cost = c;
            best_seq = cand;
        }
        trace.push_back(make_record(trace.size(), c, cand, better));
        return c.value;
    };

    if (dim == 0) {
        score(v);
        const bool ok = best_cost.value <= config.tolerance;
        return finish(kind, best_seq, best_cost, std::move(trace), ok,
                      ok ? "tolerance" : "no free parameters");
    }

    const auto search = make_search(config.search);
    SearchOptions options;
    options.max_evaluations = config.max_iterations;
    options.target = config.tolerance;
    for (int r = 0; r < config.max_restarts; ++r) {
        Rng rng(derive_seed(config.seed, {kAngleStream, static_cast<std::uint64_t>(r)}));
        const std::vector<double> x0 =
            (r == 0 && warm != nullptr) ? *warm : random_angles(dim, rng);
        search->minimize(
            [&](std::span<const double> x) { return score(v.with_parameters(x)); }, x0, options,
            rng);
        if (best_cost.value <= config.tolerance) {
            return finish(kind, best_seq, best_cost, std::move(trace), true, "tolerance");
        }
    }
    return finish(kind, best_seq, best_cost, std::move(trace), false, "restart limit");
}

CompilationResult gradient_potq_descent(const GateSequence &u, const GateSequence &v,
                                        const std::vector<double> *warm, const CostKind &kind,
                                        const OptimizerConfig &config) {
    CostEvaluator eval(u, kind, config.backend(), kGradStream);
    const std::size_t dim = v.num_parameters();
    ConvergenceTrace trace;
    GateSequence best_seq = v;
    CostEstimate best_cost{2.0, 0, 0.0};

    for (int r = 0; r < config.max_restarts; ++r) {
        Rng rng(derive_seed(config.seed, {kAngleStream, static_cast<std::uint64_t>(r)}));
        std::vector<double> alpha =
            (r == 0 && warm != nullptr) ? *warm : random_angles(dim, rng);
        GateSequence cur = v.with_parameters(alpha);
        CostEstimate cost = eval(cur);
        trace.push_back(make_record(trace.size(), cost, cur, true));
        for (int tau = 1; tau <= config.max_iterations && dim > 0; ++tau) {
            const auto g = gradient_potq(u, cur, eval.next_backend());
            for (std::size_t i = 0; i < dim; ++i) {
                alpha[i] -= config.learning_rate * g[i];
            }
            cur = v.with_parameters(alpha);
            cost = eval(cur);
            auto rec = make_record(trace.size(), cost, cur, true);
            rec.gradient_norm = std::sqrt(norm_squared(g));
            rec.learning_rate = config.learning_rate;
            trace.push_back(std::move(rec));
            if (cost.value <= config.tolerance) {
                break;
            }
        }
        if (cost.value <= best_cost.value) {
            best_cost = cost;
            best_seq = cur;
        }
        if (best_cost.value <= config.tolerance) {
            return finish(kind, best_seq, best_cost, std::move(trace), true, "tolerance");
        }
    }
    return finish(kind, best_seq, best_cost, std::move(trace), false, "restart limit");
}

CompilationResult adaptive_descent(const GateSequence &u, const GateSequence &v,
                                   const std::vector<double> *warm, const CostKind &kind,
                                   const OptimizerConfig &config) {
    CostEvaluator eval(u, kind, config.backend(), kGradStream);
    const std::size_t dim = v.num_parameters();
    Rng rng(derive_seed(config.seed, {kAngleStream, 0}));
    std::vector<double> alpha = warm != nullptr ? *warm : random_angles(dim, rng);
    GateSequence cur = v.with_parameters(alpha);
    CostEstimate cost = eval(cur);
    ConvergenceTrace trace;
    trace.push_back(make_record(0, cost, cur, true));
    if (dim == 0) {
        return finish(kind, cur, cost, std::move(trace), true, "no free parameters");
    }

    double eta = config.learning_rate;
    int grad_count = 0;
    int tau = 0;
    while (tau < config.max_iterations && grad_count < 4) {
        ++tau;
        const auto g = gradient_shift(u, cur, kind, eval.next_backend());
        const double grad = norm_squared(g);
        // Consecutive rule: a large gradient resets the count.
        grad_count = grad <= config.tolerance ? grad_count + 1 : 0;

        std::vector<double> a1 = alpha;
        std::vector<double> a2 = alpha;
        for (std::size_t i = 0; i < dim; ++i) {
            a1[i] = alpha[i] - eta * g[i];
            a2[i] = a1[i] - eta * g[i];
        }
        const double c2 = eval(v.with_parameters(a2)).value;
        if (cost.value - c2 >= eta * grad) {
            eta *= 2.0;
            alpha = std::move(a2);
        } else {
            const double c1 = eval(v.with_parameters(a1)).value;
            if (cost.value - c1 < 0.5 * eta * grad) {
                eta *= 0.5;
            }
            alpha = std::move(a1);
        }
        cur = v.with_parameters(alpha);
        cost = eval(cur);
        auto rec = make_record(static_cast<std::uint64_t>(tau), cost, cur, true);
        rec.gradient_norm = std::sqrt(grad);
        rec.learning_rate = eta;
        trace.push_back(std::move(rec));
    }
    const bool converged = grad_count >= 4;
    return finish(kind, cur, cost, std::move(trace), converged,
                  converged ? "gradient threshold" : "iteration limit");
}

CompilationResult gradient_dispatch(const GateSequence &u, const GateSequence &v,
                                    const std::vector<double> *warm, const CostKind &kind,
                                    const OptimizerConfig &config) {
    config.validate();
    if (kind.type == CostType::POTQ) {
        return gradient_potq_descent(u, v, warm, kind, config);
    }
    return adaptive_descent(u, v, warm, kind, config);
}

} // namespace

double AnnealingSchedule::temperature(std::uint64_t accepted) const {
    return initial_temperature * std::pow(cooling_ratio, static_cast<double>(accepted));
}

std::string inner_optimizer_name(InnerOptimizer inner) {
    switch (inner) {
    case InnerOptimizer::None:
        return "none";
    case InnerOptimizer::Free:
        return "free";
    case InnerOptimizer::Bisection:
        return "bisection";
    case InnerOptimizer::Gradient:
        return "gradient";
    }
    return "free";
}

InnerOptimizer parse_inner_optimizer(const std::string &name) {
    for (const auto k : {InnerOptimizer::None, InnerOptimizer::Free, InnerOptimizer::Bisection,
                         InnerOptimizer::Gradient}) {
        if (inner_optimizer_name(k) == name) {
            return k;
        }
    }
    throw ArgumentError("unknown inner optimizer '" + name + "'");
}

void OptimizerConfig::validate() const {
    if (!(tolerance > 0.0 && tolerance < 1.0)) {
        throw ArgumentError("tolerance: must lie in (0, 1)");
    }
    if (max_restarts < 1) {
        throw ArgumentError("max_restarts: must be at least 1");
    }
    if (max_iterations < 1) {
        throw ArgumentError("max_iterations: must be at least 1");
    }
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw ArgumentError("learning_rate: must be positive");
    }
    if (bisection_levels < 0) {
        throw ArgumentError("bisection_levels: must be non-negative");
    }
    for (std::size_t i = 0; i < fine_delta.size(); ++i) {
        if (!(fine_delta[i] > 0.0)) {
            throw ArgumentError("fine_delta: entries must be positive");
        }
        if (i > 0 && !(fine_delta[i] < fine_delta[i - 1])) {
            throw ArgumentError("fine_delta: must be strictly decreasing");
        }
    }
    if (!fine_delta.empty() && fine_delta.size() < static_cast<std::size_t>(bisection_levels) + 1) {
        throw ArgumentError("fine_delta: needs one entry per level 0.." +
                            std::to_string(bisection_levels));
    }
    if (!(annealing.initial_temperature > 0.0)) {
        throw ArgumentError("annealing.initial_temperature: must be positive");
    }
    if (!(annealing.cooling_ratio > 0.0 && annealing.cooling_ratio <= 1.0)) {
        throw ArgumentError("annealing.cooling_ratio: must lie in (0, 1]");
    }
    if (max_proposals < 0 || max_depth < 0 || max_length < 0 || compaction_proposals < 0) {
        throw ArgumentError("structure search limits must be non-negative");
    }
    if (noise) {
        noise->validate();
        if (shots == 0) {
            throw ArgumentError("noise: requires a sampled backend (shots > 0)");
        }
    }
    make_search(search);
}

double OptimizerConfig::fine_delta_at(int level) const {
    if (level < 0) {
        throw IndexError("negative bisection level");
    }
    if (fine_delta.empty()) {
        return pi / std::ldexp(1.0, level + 3);
    }
    return fine_delta.at(static_cast<std::size_t>(level));
}

Backend OptimizerConfig::backend() const {
    if (shots == 0) {
        return ExactBackend{};
    }
    return SampledBackend{shots, seed, noise};
}

CostEvaluator::CostEvaluator(GateSequence target, CostKind kind, Backend backend,
                             std::uint64_t stream)
    : target_(std::move(target)), kind_(kind), backend_(std::move(backend)), stream_(stream) {}

Backend CostEvaluator::next_backend() {
    Backend b = backend_;
    if (auto *s = std::get_if<SampledBackend>(&b)) {
        s->seed = derive_seed(s->seed, {stream_, calls_});
    }
    ++calls_;
    return b;
}

CostEstimate CostEvaluator::operator()(const GateSequence &v) {
    return evaluate_cost(kind_, target_, v, next_backend());
}

bool metropolis_accept(double delta, double temperature, Rng &rng) {
    if (delta <= 0.0) {
        return true;
    }
    if (!(temperature > 0.0)) {
        return false;
    }
    return rng.uniform() < std::exp(-delta / temperature);
}

CompilationResult optimize_continuous_free(const GateSequence &u, const GateSequence &v_structure,
                                           const CostKind &kind, const OptimizerConfig &config) {
    return free_search(u, v_structure, nullptr, kind, config);
}

CompilationResult optimize_continuous_free_from(const GateSequence &u,
                                                const GateSequence &v_start,
                                                const CostKind &kind,
                                                const OptimizerConfig &config) {
    const auto warm = v_start.parameters();
    return free_search(u, v_start, &warm, kind, config);
}

CompilationResult optimize_bisection(const GateSequence &u, const GateSequence &v_structure,
                                     const OptimizerConfig &config, const CostKind &kind) {
    config.validate();
    for (const auto idx : v_structure.parameter_gates()) {
        if (v_structure[idx].kind() != GateKind::Rz) {
            throw UnsupportedGateError("bisection only searches Rz angles, found " +
                                       std::string(kind_name(v_structure[idx].kind())));
        }
    }
    CostEvaluator eval(u, kind, config.backend(), kBisectStream);
    Rng rng(derive_seed(config.seed, {kBisectStream}));
    const std::size_t dim = v_structure.num_parameters();
    ConvergenceTrace trace;

    std::vector<double> alpha(dim, 0.0);
    GateSequence cur = v_structure.with_parameters(alpha);
    CostEstimate cost = eval(cur);
    trace.push_back(make_record(0, cost, cur, true));
    GateSequence best_seq = cur;
    CostEstimate best_cost = cost;
    std::vector<double> best_alpha = alpha;
    std::uint64_t accepted = 0;

    auto done = [&] { return best_cost.value <= config.tolerance; };
    auto consider = [&](const std::vector<double> &a, const CostEstimate &c,
                        const GateSequence &seq) {
        if (c.value < best_cost.value) {
            best_cost = c;
            best_seq = seq;
            best_alpha = a;
        }
    };

    if (dim == 0) {
        return finish(kind, best_seq, best_cost, std::move(trace), done(),
                      done() ? "tolerance" : "no free parameters");
    }

    for (int level = 0; level <= config.bisection_levels && !done(); ++level) {
        // Coarse pass over the level's grid, Metropolis acceptance.
        for (int it = 0; it < config.max_iterations && !done(); ++it) {
            std::vector<double> cand = alpha;
            const auto i = static_cast<std::size_t>(rng.uniform_int(dim));
            if (level == 0) {
                const double grid = (pi / 2.0) * static_cast<double>(1 + rng.uniform_int(3));
                cand[i] = normalize_angle(alpha[i] + grid);
            } else {
                const double step = pi / std::ldexp(1.0, level + 1);
                cand[i] = normalize_angle(alpha[i] + (rng.uniform() < 0.5 ? step : -step));
            }
            const GateSequence seq = v_structure.with_parameters(cand);
            const CostEstimate c = eval(seq);
            const bool take = metropolis_accept(c.value - cost.value,
                                                config.annealing.temperature(accepted), rng);
            if (take) {
                ++accepted;
                alpha = cand;
                cost = c;
            }
            consider(cand, c, seq);
            trace.push_back(make_record(trace.size(), c, seq, take));
        }
        // Fine pass around the best point, greedy.
        const double delta = config.fine_delta_at(level);
        for (int it = 0; it < config.max_iterations && !done(); ++it) {
            std::vector<double> cand = best_alpha;
            const auto i = static_cast<std::size_t>(rng.uniform_int(dim));
            cand[i] += rng.uniform() < 0.5 ? delta : -delta;
            const GateSequence seq = v_structure.with_parameters(cand);
            const CostEstimate c = eval(seq);
            const bool take = c.value < best_cost.value;
            consider(cand, c, seq);
            trace.push_back(make_record(trace.size(), c, seq, take));
        }
    }
    return finish(kind, best_seq, best_cost, std::move(trace), done(),
                  done() ? "tolerance" : "level limit");
}

std::vector<double> gradient_shift(const GateSequence &u, const GateSequence &v,
                                   const CostKind &kind, const Backend &backend) {
    if (kind.type == CostType::POTQ) {
        throw ArgumentError("the shift rule does not apply to the POTQ cost; use gradient_potq");
    }
    const auto base = v.parameters();
    std::vector<double> grad(base.size(), 0.0);
#ifdef QAQC_MUTATION_SHIFT_SIGN
    constexpr double kSign = -1.0;
#else
    constexpr double kSign = 1.0;
#endif
    parallel_for(base.size(), [&](std::size_t i) {
        std::vector<double> plus = base;
        std::vector<double> minus = base;
        plus[i] += pi / 2.0;
        minus[i] -= pi / 2.0;
        const double cp =
            evaluate_cost(kind, u, v.with_parameters(plus), reseeded(backend, 2 * i)).value;
        const double cm =
            evaluate_cost(kind, u, v.with_parameters(minus), reseeded(backend, 2 * i + 1)).value;
        grad[i] = kSign * 0.5 * (cp - cm);
    });
    return grad;
}

std::vector<double> gradient_potq(const GateSequence &u, const GateSequence &v,
                                  const Backend &backend) {
    const auto base = v.parameters();
    std::vector<double> grad(base.size(), 0.0);
    parallel_for(base.size(), [&](std::size_t i) {
        // R_P(a + pi) = R_P(a) R_P(pi) and R_P(pi) = -iP, so this inserts -iP after the gate.
        std::vector<double> shifted = base;
        shifted[i] += pi;
        const double c = cost_potq(u, v.with_parameters(shifted), reseeded(backend, i)).value;
        grad[i] = -0.5 * (1.0 - c);
    });
    return grad;
}

CompilationResult optimize_gradient(const GateSequence &u, const GateSequence &v_structure,
                                    const CostKind &kind, const OptimizerConfig &config) {
    return gradient_dispatch(u, v_structure, nullptr, kind, config);
}

CompilationResult optimize_gradient_from(const GateSequence &u, const GateSequence &v_start,
                                         const CostKind &kind, const OptimizerConfig &config) {
    const auto warm = v_start.parameters();
    return gradient_dispatch(u, v_start, &warm, kind, config);
}

} // namespace qaqc
