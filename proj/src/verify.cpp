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
#include "qaqc/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "qaqc/anneal.hpp"
#include "qaqc/cost.hpp"
#include "qaqc/optimize.hpp"
#include "qaqc/oracles.hpp"
#include "qaqc/presets.hpp"
#include "qaqc/transforms.hpp"

namespace qaqc {

namespace {

struct Pair {
    GateSequence u;
    GateSequence v;
};

std::vector<Pair> corpus(std::uint64_t seed, int count, int max_n) {
    std::vector<Pair> out;
    const Alphabet full = Alphabet::full();
    for (int i = 0; i < count; ++i) {
        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(i)}));
        const int n = 1 + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(max_n)));
        const int len = 1 + static_cast<int>(rng.uniform_int(4 * static_cast<std::uint64_t>(n)));
        GateSequence u = random_alphabet_sequence(full, n, len, rng);
        // Every fourth pair is a small perturbation so low costs are covered too.
        GateSequence v = (i % 4 == 0 && u.num_parameters() > 0)
                             ? [&] {
                                   auto a = u.parameters();
                                   a[0] += 0.05 * rng.normal();
                                   return u.with_parameters(a);
                               }()
                             : random_alphabet_sequence(full, n, len, rng);
        out.push_back({std::move(u), std::move(v)});
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

VerifyCheck max_error_check(const std::string &name, double limit,
                            const std::function<double()> &worst) {
    VerifyCheck c;
    c.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const double w = worst();
        c.passed = w <= limit;
        c.detail = "max err " + num(w) + " (limit " + num(limit) + ")";
    } catch (const std::exception &e) {
        c.passed = false;
        c.detail = std::string("threw: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

} // namespace

std::vector<VerifyCheck> verify_suite(std::uint64_t seed) {
    const auto pairs = corpus(seed, 120, 3);
    const ExactBackend exact;
    std::vector<VerifyCheck> checks;

    checks.push_back(max_error_check("hst matches matrix oracle", 1e-10, [&] {
        double w = 0.0;
        for (const auto &p : pairs) {
            const double o = hst_cost_oracle(sequence_to_matrix(p.u).matrix(),
                                             sequence_to_matrix(p.v).matrix());
            w = std::max(w, std::abs(cost_hst(p.u, p.v, exact).value - o));
        }
        return w;
    }));

    checks.push_back(max_error_check("lhst matches channel oracle", 1e-10, [&] {
        double w = 0.0;
        for (const auto &p : pairs) {
            const double o = lhst_cost_oracle(sequence_to_matrix(p.u).matrix(),
                                              sequence_to_matrix(p.v).matrix());
            w = std::max(w, std::abs(cost_lhst(p.u, p.v, exact).value - o));
        }
        return w;
    }));

    checks.push_back(max_error_check("lhst <= hst <= n lhst", 1e-9, [&] {
        double w = 0.0;
        for (const auto &p : pairs) {
            const double h = cost_hst(p.u, p.v, exact).value;
            const double l = cost_lhst(p.u, p.v, exact).value;
            const int n = p.u.num_qubits();
            w = std::max({w, l - h, h - n * l});
        }
        return w;
    }));

    checks.push_back(max_error_check("zero cost iff equal up to phase", 1e-9, [&] {
        double w = 0.0;
        for (const auto &p : pairs) {
            GateSequence phased = p.u;
            phased.add_global_phase(0.7);
            w = std::max(w, cost_hst(p.u, phased, exact).value);
            w = std::max(w, cost_lhst(p.u, phased, exact).value);
            const double h = cost_hst(p.u, p.v, exact).value;
            const double dist = phase_aligned_distance(sequence_to_matrix(p.u).matrix(),
                                                       sequence_to_matrix(p.v).matrix());
            // A vanishing cost forces a vanishing distance and vice versa.
            if ((h < 1e-12) != (dist < 1e-5)) {
                w = std::max(w, 1.0);
            }
        }
        return w;
    }));

    checks.push_back(max_error_check("shift rule matches finite differences", 1e-6, [&] {
        double w = 0.0;
        for (std::size_t i = 0; i < 30; ++i) {
            const auto &p = pairs[i];
            if (p.v.num_parameters() == 0) {
                continue;
            }
            for (const auto kind : {CostKind::hst(), CostKind::lhst()}) {
                const auto g = gradient_shift(p.u, p.v, kind, exact);
                const auto fd = finite_difference_gradient(
                    [&](std::span<const double> x) {
                        return evaluate_cost(kind, p.u, p.v.with_parameters(x), exact).value;
                    },
                    p.v.parameters());
                for (std::size_t k = 0; k < g.size(); ++k) {
                    w = std::max(w, std::abs(g[k] - fd[k]));
                }
            }
        }
        return w;
    }));

    checks.push_back(max_error_check("potq gradient matches finite differences", 1e-6, [&] {
        double w = 0.0;
        for (std::size_t i = 0; i < 30; ++i) {
            const auto &p = pairs[i];
            if (p.v.num_parameters() == 0 || p.u.num_qubits() > 2) {
                continue;
            }
            const auto g = gradient_potq(p.u, p.v, exact);
            const auto fd = finite_difference_gradient(
                [&](std::span<const double> x) {
                    return cost_potq(p.u, p.v.with_parameters(x), exact).value;
                },
                p.v.parameters());
            for (std::size_t k = 0; k < g.size(); ++k) {
                w = std::max(w, std::abs(g[k] - fd[k]));
            }
        }
        return w;
    }));

    checks.push_back(max_error_check("potq overlap matches oracle", 1e-10, [&] {
        double w = 0.0;
        for (std::size_t i = 0; i < 40; ++i) {
            const auto &p = pairs[i];
            const auto o = overlap_oracle(sequence_to_matrix(p.u).matrix(),
                                          sequence_to_matrix(p.v).matrix());
            w = std::max(w, std::abs(potq_overlap(p.u, p.v, exact).value - o));
        }
        return w;
    }));

    checks.push_back(max_error_check("trace via lhst matches oracle", 1e-9, [&] {
        double w = 0.0;
        for (std::size_t i = 0; i < 40; ++i) {
            const auto &u = pairs[i].u;
            const double o = sequence_to_matrix(u).matrix().trace().real();
            w = std::max(w, std::abs(trace_via_lhst(u, exact).value - o));
        }
        return w;
    }));

    checks.push_back(max_error_check("trace via one clean qubit matches oracle", 1e-9, [&] {
        double w = 0.0;
        for (std::size_t i = 0; i < 40; ++i) {
            const auto &u = pairs[i].u;
            const auto o = sequence_to_matrix(u).matrix().trace();
            w = std::max(w, std::abs(trace_via_pooq(u, exact).value - o));
        }
        return w;
    }));

    checks.push_back(max_error_check("conjugate sequence in the IBM alphabet", 1e-9, [&] {
        double w = 0.0;
        const Alphabet ibm = Alphabet::ibm();
        for (std::uint64_t i = 0; i < 40; ++i) {
            Rng rng(derive_seed(seed, {0xC0, i}));
            const GateSequence s = random_alphabet_sequence(ibm, 2, 8, rng);
            const MatrixXc expected = sequence_to_matrix(s).matrix().conjugate();
            const MatrixXc got = sequence_to_matrix(conjugate_sequence(s, ibm)).matrix();
            w = std::max(w, (expected - got).cwiseAbs().maxCoeff());
        }
        return w;
    }));

    checks.push_back(max_error_check("presets match textbook matrices", 1e-12, [&] {
        double w = 0.0;
        for (const char *name : {"I", "T", "X", "H", "CNOT", "CZ", "CH", "SWAP", "QFT2"}) {
            const MatrixXc got = sequence_to_matrix(preset_target(name)).matrix();
            w = std::max(w, phase_aligned_distance(got, textbook_matrix(name)));
        }
        return w;
    }));

    checks.push_back(max_error_check("average fidelity identity (4 sigma)", 4.0, [&] {
        Rng rng(derive_seed(seed, {0xF0}));
        const GateSequence su = random_alphabet_sequence(Alphabet::full(), 2, 6, rng);
        const GateSequence sv = random_alphabet_sequence(Alphabet::full(), 2, 6, rng);
        const MatrixXc u = sequence_to_matrix(su).matrix();
        const MatrixXc v = sequence_to_matrix(sv).matrix();
        const auto mc = avg_fidelity_monte_carlo(u, v, 20000, derive_seed(seed, {0xF1}));
        const double predicted = avg_fidelity_from_hst(cost_hst(su, sv, exact).value, 2);
        return std::abs(mc.mean - predicted) / mc.std_error;
    }));

    checks.push_back(max_error_check("metropolis acceptance rate (3 sigma)", 3.0, [&] {
        Rng rng(derive_seed(seed, {0xAC}));
        const int trials = 10000;
        int hits = 0;
        for (int i = 0; i < trials; ++i) {
            hits += metropolis_accept(0.1, 0.1, rng) ? 1 : 0;
        }
        const double p = std::exp(-1.0);
        const double sigma = std::sqrt(p * (1.0 - p) / trials);
        return std::abs(hits / static_cast<double>(trials) - p) / sigma;
    }));

    return checks;
}

std::string format_verify_table(const std::vector<VerifyCheck> &checks) {
    std::ostringstream os;
    std::size_t width = 5;
    for (const auto &c : checks) {
        width = std::max(width, c.name.size());
    }
    int failed = 0;
    for (const auto &c : checks) {
        char secs[16];
        std::snprintf(secs, sizeof secs, "%7.2fs", c.seconds);
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ')
           << secs << "  " << c.detail << '\n';
        failed += c.passed ? 0 : 1;
    }
    os << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size()
       << " checks passed\n";
    return os.str();
}

} // namespace qaqc
