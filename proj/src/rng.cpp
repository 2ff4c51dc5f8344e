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
#include "qaqc/rng.hpp"

#include <cmath>
#include <numbers>

namespace qaqc {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53U;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57U;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9U;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85U;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
        mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kPhiloxW0;
        key[1] += kPhiloxW1;
    }
    return ctr;
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> streams) {
    std::uint64_t h = splitmix64(seed);
    for (const auto s : streams) {
        h = splitmix64(h ^ splitmix64(s + 0x632BE59BD9B4E019ULL));
    }
    return h;
}

Rng::Rng(std::uint64_t seed) noexcept
    : seed_(seed), key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

void Rng::refill() noexcept {
    block_ = philox4x32_10(counter_, key_);
    // 128-bit increment
    for (auto &word : counter_) {
        if (++word != 0) {
            break;
        }
    }
    consumed_ = 0;
}

std::uint64_t Rng::next_u64() noexcept {
    if (consumed_ > 2) {
        refill();
    }
    const std::uint64_t lo = block_[consumed_];
    const std::uint64_t hi = block_[consumed_ + 1];
    consumed_ += 2;
    return (hi << 32) | lo;
}

double Rng::uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t bound) noexcept {
    // Lemire's nearly-divisionless rejection method.
    auto product = static_cast<u128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            product = static_cast<u128>(next_u64()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

double Rng::normal() noexcept {
    if (has_spare_normal_) {
        has_spare_normal_ = false;
        return spare_normal_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    has_spare_normal_ = true;
    return radius * std::cos(angle);
}

std::complex<double> Rng::complex_normal() noexcept {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

std::uint64_t Rng::binomial(std::uint64_t trials, double p) noexcept {
    if (p <= 0.0) {
        return 0;
    }
    if (p >= 1.0) {
        return trials;
    }
    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        successes += uniform() < p ? 1U : 0U;
    }
    return successes;
}

} // namespace qaqc
