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
 * Simulated annealing over gate structures.
 *
 * A proposal either replaces one to three gates with random alphabet gates or
 * grows or shrinks the sequence by one gate. Surviving gates keep their
 * angles, the angles are then re-optimized with OptimizerConfig::inner, and
 * the proposal is accepted by the Metropolis rule at T_k = T0 r^k where k
 * counts accepted proposals. Trace iterations count proposals.
 *
 * Once the best cost meets the tolerance, the remaining compaction budget is
 * spent on deleting and replacing gates of the best sequence while staying
 * within tolerance. Among sequences within tolerance the shorter one wins,
 * then the one with fewer non-Rz gates (Rz is a frame change on the target
 * devices); otherwise the incumbent is kept.
 */
#pragma once

#include "qaqc/optimize.hpp"

namespace qaqc {

/// Uniformly random gate of `alphabet` on an n-qubit register, respecting connectivity.
Gate random_alphabet_gate(const Alphabet &alphabet, int num_qubits, Rng &rng);

/// Random sequence of `length` alphabet gates.
GateSequence random_alphabet_sequence(const Alphabet &alphabet, int num_qubits, int length,
                                      Rng &rng);

CompilationResult anneal_structure(const GateSequence &u, const Alphabet &alphabet,
                                   int initial_length, const CostKind &kind,
                                   const OptimizerConfig &config);

/**
 * Rounds of: freeze the best sequence so far, append a random segment of
 * `segment_length` gates, anneal only the segment while re-optimizing every
 * angle. The best-ever sequence is kept across rounds. segment_length 0 is
 * plain anneal_structure with `initial_length`.
 */
CompilationResult layered_refinement(const GateSequence &u, const Alphabet &alphabet,
                                     int segment_length, int rounds, const CostKind &kind,
                                     const OptimizerConfig &config, int initial_length = 1);

} // namespace qaqc
