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
 * Philox4x32-10 counter-based generator and the handful of distributions the
 * simulator needs. Distributions are implemented here rather than taken from
 * <random> so that seeded runs are bit-reproducible across standard libraries.
 */
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace qaqc {

/// One Philox4x32 block: 10 rounds applied to `counter` under `key`.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Mixes a base seed with stream identifiers into an independent 64-bit seed.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> streams);

/**
 * @brief Counter-based random number generator.
 *
 * The 64-bit seed is the Philox key; the 128-bit counter advances once per
 * block of four 32-bit words. Satisfies UniformRandomBitGenerator.
 */
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept { return next_u64(); }
    std::uint64_t next_u64() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept;
    /// Uniform integer in [0, bound). `bound` must be positive.
    std::uint64_t uniform_int(std::uint64_t bound) noexcept;
    double normal() noexcept;
    std::complex<double> complex_normal() noexcept;
    bool bernoulli(double p) noexcept { return uniform() < p; }
    /// Number of successes in `trials` Bernoulli(p) draws.
    std::uint64_t binomial(std::uint64_t trials, double p) noexcept;

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_{};
    std::array<std::uint32_t, 4> block_{};
    int consumed_ = 4;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

} // namespace qaqc
