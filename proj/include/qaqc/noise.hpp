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
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qaqc/noise_model.hpp"
#include "qaqc/rng.hpp"
#include "qaqc/sequence.hpp"

namespace qaqc {

/**
 * Ideal gate, then for each touched qubit: a uniformly random X, Y or Z with
 * probability p1 (p2 for two-qubit gates), then one amplitude-damping
 * trajectory step of strength gamma. The state stays normalized.
 */
void noisy_apply(StateVector &state, const Gate &gate, const NoiseModel &model, Rng &rng);

/// One trajectory of `seq` from basis state `input`.
StateVector simulate_noisy(const GateSequence &seq, const NoiseModel &model, Rng &rng,
                           std::uint64_t input = 0);

/**
 * Measurement counts of `measured` after running `circuit` from basis `input`,
 * indexed by outcome (bit i = measured[i]).
 *
 * Without gate noise the circuit is simulated once and sampled (readout flips
 * still apply). With gate noise every shot is a fresh trajectory seeded from
 * (rng_seed, shot).
 */
std::vector<std::uint64_t> sample_circuit(const GateSequence &circuit,
                                          std::span<const int> measured, std::uint64_t shots,
                                          std::uint64_t rng_seed,
                                          const std::optional<NoiseModel> &model = std::nullopt,
                                          std::uint64_t input = 0);

} // namespace qaqc
