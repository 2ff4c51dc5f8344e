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
#include "qaqc/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "qaqc/errors.hpp"

namespace qaqc {

namespace {

constexpr std::uint64_t kStructStream = 0x53545255;
constexpr std::uint64_t kInnerStream = 0x494e4e52;
constexpr std::uint64_t kRoundStream = 0x524e4453;
constexpr int kMaxRedraws = 100;

struct Scored {
    GateSequence seq;
    CostEstimate cost;
};

std::size_t non_rz_count(const GateSequence &seq) { return seq.size() - seq.count(GateKind::Rz); }

/// True when `cand` should replace `inc` as the best-ever sequence.
bool better(const Scored &cand, const Scored &inc, double tol) {
    const bool cand_ok = cand.cost.value <= tol;
    const bool inc_ok = inc.cost.value <= tol;
    if (cand_ok != inc_ok) {
        return cand_ok;
    }
    const bool tie = (cand_ok && inc_ok) || cand.cost.value == inc.cost.value;
    if (tie) {
        const auto ck = std::make_pair(cand.seq.size(), non_rz_count(cand.seq));
        const auto ik = std::make_pair(inc.seq.size(), non_rz_count(inc.seq));
        return ck < ik;
    }
    return cand.cost.value < inc.cost.value;
}

struct GatePool {
    std::vector<GateKind> one;
    std::vector<GateKind> two;
    std::vector<std::pair<int, int>> pairs;
};

GatePool gate_pool(const Alphabet &alphabet, int n) {
    GatePool pool;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (alphabet.connected(a, b)) {
                pool.pairs.emplace_back(a, b);
            }
        }
    }
    for (const auto k : alphabet.kinds()) {
        if (k == GateKind::FixedOneQubit || k == GateKind::FixedTwoQubit) {
            continue;
        }
        if (kind_arity(k) == 1) {
            pool.one.push_back(k);
        } else if (!pool.pairs.empty()) {
            pool.two.push_back(k);
        }
    }
    if (pool.one.empty() && pool.two.empty()) {
        throw ArgumentError("alphabet '" + alphabet.name() + "' has no usable gate on " +
                            std::to_string(n) + " qubit(s)");
    }
    return pool;
}

class Annealer {
  public:
    Annealer(const GateSequence &u, const Alphabet &alphabet, const CostKind &kind,
             const OptimizerConfig &config)
        : u_(u), alphabet_(alphabet), kind_(kind), config_(config),
          pool_(gate_pool(alphabet, u.num_qubits())) {}

    CompilationResult run(GateSequence initial, std::size_t frozen, std::uint64_t stream);

  private:
    Scored optimize(const GateSequence &cand);
    std::optional<GateSequence> propose(const GateSequence &cur, std::size_t frozen,
                                        Rng &rng) const;
    void record(const Scored &s, bool accepted);

    const GateSequence &u_;
    const Alphabet &alphabet_;
    CostKind kind_;
    OptimizerConfig config_;
    GatePool pool_;
    std::uint64_t stream_ = 0;
    std::uint64_t evaluations_ = 0;
    ConvergenceTrace trace_;
};

Scored Annealer::optimize(const GateSequence &cand) {
    OptimizerConfig inner = config_;
    inner.seed = derive_seed(config_.seed, {kInnerStream, stream_, evaluations_++});
    CompilationResult r;
    switch (config_.inner) {
    case InnerOptimizer::None: {
        CostEvaluator eval(u_, kind_, inner.backend(), kInnerStream);
        return {cand, eval(cand)};
    }
    case InnerOptimizer::Free:
        r = optimize_continuous_free_from(u_, cand, kind_, inner);
        break;
    case InnerOptimizer::Bisection:
        r = optimize_bisection(u_, cand, inner, kind_);
        break;
    case InnerOptimizer::Gradient:
        r = optimize_gradient_from(u_, cand, kind_, inner);
        break;
    }
    return {std::move(r.best_sequence), r.best_cost};
}

std::optional<GateSequence> Annealer::propose(const GateSequence &cur, std::size_t frozen,
                                              Rng &rng) const {
    const int n = u_.num_qubits();
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        GateSequence cand = cur;
        const std::size_t mutable_len = cur.size() - frozen;
        const bool can_grow = config_.max_length == 0 ||
                              cur.size() < static_cast<std::size_t>(config_.max_length);
        const bool can_shrink = mutable_len > 1;
        const double r = rng.uniform();
        if (r < 1.0 / 3.0 && (can_grow || can_shrink)) {
            const bool grow = can_grow && (!can_shrink || rng.uniform() < 0.5);
            if (grow) {
                cand.insert(frozen + rng.uniform_int(mutable_len + 1),
                            random_alphabet_gate(alphabet_, n, rng));
            } else {
                cand.erase(frozen + rng.uniform_int(mutable_len));
            }
        } else {
            const std::size_t k = std::min<std::size_t>(1 + rng.uniform_int(3), mutable_len);
            std::vector<std::size_t> slots(mutable_len);
            for (std::size_t i = 0; i < mutable_len; ++i) {
                slots[i] = frozen + i;
            }
            for (std::size_t i = 0; i < k; ++i) {
                std::swap(slots[i], slots[i + rng.uniform_int(mutable_len - i)]);
                cand.replace(slots[i], random_alphabet_gate(alphabet_, n, rng));
            }
        }
        if (config_.max_depth > 0 && depth(cand) > config_.max_depth) {
            continue;
        }
        return cand;
    }
    return std::nullopt;
}

void Annealer::record(const Scored &s, bool accepted) {
    TraceRecord r;
    r.iteration = trace_.size();
    r.cost = s.cost;
    r.structure_hash = s.seq.structure_hash();
    r.accepted = accepted;
    r.angles = s.seq.parameters();
    r.sequence = s.seq;
    trace_.push_back(std::move(r));
}

CompilationResult Annealer::run(GateSequence initial, std::size_t frozen, std::uint64_t stream) {
    stream_ = stream;
    const double tol = config_.tolerance;
    Rng rng(derive_seed(config_.seed, {kStructStream, stream}));

    Scored cur = optimize(initial);
    Scored best = cur;
    record(cur, true);
    std::uint64_t accepted = 0;

    for (int p = 0; p < config_.max_proposals && best.cost.value > tol; ++p) {
        auto cand = propose(cur.seq, frozen, rng);
        if (!cand) {
            continue;
        }
        Scored s = optimize(*cand);
        const bool take = metropolis_accept(s.cost.value - cur.cost.value,
                                            config_.annealing.temperature(accepted), rng);
        if (take) {
            ++accepted;
            cur = s;
        }
        if (better(s, best, tol)) {
            best = s;
        }
        record(s, take);
    }

    const bool reached = best.cost.value <= tol;
    if (reached) {
        int budget = config_.compaction_proposals;
        // Deletions first: every single-gate removal of the current best.
        bool shrunk = true;
        while (budget > 0 && shrunk) {
            shrunk = false;
            const std::size_t len = best.seq.size();
            for (std::size_t i = frozen; i < len && budget > 0 && len - frozen > 1; ++i) {
                GateSequence cand = best.seq;
                cand.erase(i);
                if (config_.max_depth > 0 && depth(cand) > config_.max_depth) {
                    continue;
                }
                --budget;
                Scored s = optimize(cand);
                const bool take = better(s, best, tol);
                record(s, take);
                if (take) {
                    best = std::move(s);
                    shrunk = true;
                    break;
                }
            }
        }
        // Then random rewrites of the best, kept only when they win the tie-break.
        while (budget > 0) {
            --budget;
            auto cand = propose(best.seq, frozen, rng);
            if (!cand) {
                continue;
            }
            Scored s = optimize(*cand);
            const bool take = better(s, best, tol);
            record(s, take);
            if (take) {
                best = std::move(s);
            }
        }
    }

    CompilationResult result;
    result.epsilon_approx = epsilon_from_cost(kind_, best.cost.value, u_.num_qubits());
    result.best_sequence = std::move(best.seq);
    result.best_cost = best.cost;
    result.trace = std::move(trace_);
    result.converged = reached;
    result.stop_reason = reached ? "tolerance" : "proposal limit";
    trace_.clear();
    return result;
}

int capped_length(int length, const OptimizerConfig &config) {
    if (config.max_length > 0) {
        length = std::min(length, config.max_length);
    }
    if (config.max_depth > 0) {
        length = std::min(length, config.max_depth);
    }
    return std::max(length, 1);
}

} // namespace

Gate random_alphabet_gate(const Alphabet &alphabet, int num_qubits, Rng &rng) {
    const GatePool pool = gate_pool(alphabet, num_qubits);
    const std::size_t total = pool.one.size() + pool.two.size();
    const std::size_t pick = rng.uniform_int(total);
    if (pick < pool.one.size()) {
        const GateKind k = pool.one[pick];
        const int q = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(num_qubits)));
        if (kind_is_parameterized(k)) {
            return {k, q, 2.0 * std::numbers::pi * rng.uniform()};
        }
        return {k, q};
    }
    const GateKind k = pool.two[pick - pool.one.size()];
    auto [a, b] = pool.pairs[rng.uniform_int(pool.pairs.size())];
    if (rng.uniform() < 0.5) {
        std::swap(a, b);
    }
    return {k, a, b};
}

GateSequence random_alphabet_sequence(const Alphabet &alphabet, int num_qubits, int length,
                                      Rng &rng) {
    GateSequence seq(num_qubits);
    for (int i = 0; i < length; ++i) {
        seq.append(random_alphabet_gate(alphabet, num_qubits, rng));
    }
    return seq;
}

CompilationResult anneal_structure(const GateSequence &u, const Alphabet &alphabet,
                                   int initial_length, const CostKind &kind,
                                   const OptimizerConfig &config) {
    if (initial_length < 1) {
        throw ArgumentError("initial_length must be at least 1");
    }
    config.validate();
    Rng rng(derive_seed(config.seed, {kStructStream}));
    GateSequence initial = random_alphabet_sequence(alphabet, u.num_qubits(),
                                                    capped_length(initial_length, config), rng);
    Annealer annealer(u, alphabet, kind, config);
    return annealer.run(std::move(initial), 0, 0);
}

CompilationResult layered_refinement(const GateSequence &u, const Alphabet &alphabet,
                                     int segment_length, int rounds, const CostKind &kind,
                                     const OptimizerConfig &config, int initial_length) {
    if (rounds < 1) {
        throw ArgumentError("rounds must be at least 1");
    }
    if (segment_length < 0) {
        throw ArgumentError("segment_length must be non-negative");
    }
    if (segment_length == 0) {
        return anneal_structure(u, alphabet, initial_length, kind, config);
    }
    config.validate();
    const int n = u.num_qubits();
    std::optional<Scored> best;
    ConvergenceTrace trace;
    bool reached = false;
    for (int round = 0; round < rounds && !reached; ++round) {
        Rng rng(derive_seed(config.seed, {kRoundStream, static_cast<std::uint64_t>(round)}));
        GateSequence start = best ? best->seq : GateSequence(n);
        const std::size_t frozen = start.size();
        start.append(random_alphabet_sequence(alphabet, n, segment_length, rng));
        if (config.max_length > 0 && start.size() > static_cast<std::size_t>(config.max_length)) {
            break;
        }
        Annealer annealer(u, alphabet, kind, config);
        CompilationResult r = annealer.run(std::move(start), frozen,
                                           static_cast<std::uint64_t>(round) + 1);
        for (auto &rec : r.trace) {
            rec.iteration = trace.size();
            trace.push_back(std::move(rec));
        }
        Scored s{std::move(r.best_sequence), r.best_cost};
        if (!best || better(s, *best, config.tolerance)) {
            best = std::move(s);
        }
        reached = best->cost.value <= config.tolerance;
    }
    if (!best) {
        throw ArgumentError("max_length leaves no room for a segment");
    }
    CompilationResult result;
    result.epsilon_approx = epsilon_from_cost(kind, best->cost.value, n);
    result.best_sequence = best->seq;
    result.best_cost = best->cost;
    result.trace = std::move(trace);
    result.converged = reached;
    result.stop_reason = reached ? "tolerance" : "round limit";
    return result;
}

} // namespace qaqc
