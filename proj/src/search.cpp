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
#include "qaqc/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qaqc/errors.hpp"

namespace qaqc {

namespace {

struct Budget {
    const Objective &f;
    const SearchOptions &options;
    SearchResult best;

    [[nodiscard]] bool exhausted() const {
        return best.evaluations >= options.max_evaluations || best.value <= options.target;
    }

    double operator()(const std::vector<double> &x) {
        const double v = f(x);
        ++best.evaluations;
        if (v < best.value) {
            best.value = v;
            best.x = x;
        }
        return v;
    }
};

} // namespace

SearchResult NelderMead::minimize(const Objective &f, std::span<const double> x0,
                                  const SearchOptions &options, Rng &rng) const {
    if (options.max_evaluations < 1) {
        throw ArgumentError("max_evaluations must be positive");
    }
    Budget eval{f, options, {}};
    const std::size_t dim = x0.size();
    std::vector<double> start(x0.begin(), x0.end());
    eval(start);
    if (dim == 0) {
        return eval.best;
    }

    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    double step = options.initial_step;
    std::vector<std::vector<double>> simplex;
    std::vector<double> values;
    bool first = true;

    while (!eval.exhausted()) {
        // (Re)build the simplex around the best point found so far.
        const std::vector<double> centre = eval.best.x;
        simplex.assign(1, centre);
        values.assign(1, eval.best.value);
        for (std::size_t i = 0; i < dim && !eval.exhausted(); ++i) {
            std::vector<double> v = centre;
            const double jitter = first ? 1.0 : 0.5 + rng.uniform();
            v[i] += (rng.uniform() < 0.5 ? -1.0 : 1.0) * step * jitter;
            simplex.push_back(v);
            values.push_back(eval(v));
        }
        first = false;
        if (simplex.size() < dim + 1) {
            break;
        }

        std::vector<std::size_t> order(dim + 1);
        while (!eval.exhausted()) {
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
            const std::size_t lo = order.front();
            const std::size_t hi = order.back();
            const std::size_t second = order[dim - 1];

            double spread = 0.0;
            for (std::size_t k = 0; k <= dim; ++k) {
                for (std::size_t i = 0; i < dim; ++i) {
                    spread = std::max(spread, std::abs(simplex[k][i] - simplex[lo][i]));
                }
            }
            if (spread < 1e-9) {
                break;
            }

            std::vector<double> centroid(dim, 0.0);
            for (std::size_t k = 0; k <= dim; ++k) {
                if (k == hi) {
                    continue;
                }
                for (std::size_t i = 0; i < dim; ++i) {
                    centroid[i] += simplex[k][i] / static_cast<double>(dim);
                }
            }
            auto along = [&](double t) {
                std::vector<double> p(dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    p[i] = centroid[i] + t * (simplex[hi][i] - centroid[i]);
                }
                return p;
            };

            auto xr = along(-kReflect);
            const double fr = eval(xr);
            if (fr < values[lo]) {
                if (eval.exhausted()) {
                    break;
                }
                auto xe = along(-kExpand);
                const double fe = eval(xe);
                if (fe < fr) {
                    simplex[hi] = std::move(xe);
                    values[hi] = fe;
                } else {
                    simplex[hi] = std::move(xr);
                    values[hi] = fr;
                }
                continue;
            }
            if (fr < values[second]) {
                simplex[hi] = std::move(xr);
                values[hi] = fr;
                continue;
            }
            if (eval.exhausted()) {
                break;
            }
            const bool outside = fr < values[hi];
            auto xc = along(outside ? -kContract : kContract);
            const double fc = eval(xc);
            if (fc < std::min(fr, values[hi])) {
                simplex[hi] = std::move(xc);
                values[hi] = fc;
                continue;
            }
            for (std::size_t k = 0; k <= dim && !eval.exhausted(); ++k) {
                if (k == lo) {
                    continue;
                }
                for (std::size_t i = 0; i < dim; ++i) {
                    simplex[k][i] = simplex[lo][i] + kShrink * (simplex[k][i] - simplex[lo][i]);
                }
                values[k] = eval(simplex[k]);
            }
        }
        step *= 0.25;
        if (step < 1e-7) {
            step = options.initial_step * 0.1;
        }
    }
    return eval.best;
}

std::unique_ptr<DerivativeFreeSearch> make_search(const std::string &name) {
    if (name == "nelder-mead") {
        return std::make_unique<NelderMead>();
    }
    throw ArgumentError("unknown derivative-free search '" + name + "'");
}

} // namespace qaqc
