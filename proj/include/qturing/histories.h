// Copyright 2026 The qturing Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTURING_HISTORIES_H
#define QTURING_HISTORIES_H

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qturing/machine.h"
#include "qturing/state_space.h"

namespace qturing {

/// One path through the decision tree of a lone head spin that is rotated by alpha_nu and
/// then measured in the L3 basis at T_2, T_4, ...
struct HistoryBranch {
    /// L3 eigenvalues: +1 means the head was found in |1>, -1 in |0>.
    std::vector<int> outcomes;
    double probability = 0;
    /// Post-measurement head state in the (|0>, |1>) basis.
    std::array<Complex, 2> final_head{Complex(1), Complex(0)};
};

/// "+-+-" style rendering of the outcomes.
std::string format_history(std::span<const int> outcomes);

/// Every branch of nonzero probability (>= kMinBranchProbability) after `depth`
/// measurements, exactly enumerated. `depth` defaults to M. Throws SizeCap above 20.
std::vector<HistoryBranch> enumerate_histories(const MachineSpec &spec, std::optional<size_t> depth = std::nullopt);

/// sum_b p_b |final_b><final_b|. Throws OutOfRange unless the probabilities sum to 1 to 1e-12.
Matrix2 ensemble_density(std::span<const HistoryBranch> branches);

/// max over nu = 1..M of the trace distance between the head's reduced state after step
/// 2 nu of cycle 1 and the decision-tree ensemble truncated after nu measurements.
double parallelism_residual(const MachineSpec &spec);

/// Diagnostic continuation beyond the first cycle: the measured ensemble keeps being
/// rotated and measured at every pair step of every cycle. Entry m-1 is the largest
/// trace distance seen during cycle m. No bound is claimed for m > 1.
std::vector<double> parallelism_diagnostic(const MachineSpec &spec, size_t cycles);

/// Tape string -> head history. The tape string lists memory cells 1..M left to right
/// (visiting order). A tape bit 1 means the head was |0> when that cell was visited,
/// because the pair gate flips the cell exactly then. Probabilities are the tape
/// marginals of psi^(1,2M). Only cycle 1 is supported.
std::map<std::string, HistoryBranch> tape_readout(const MachineSpec &spec, size_t cycle = 1);

/// Joint distribution of all memory cells obtained by projecting them one at a time in
/// `order` (a permutation of 1..M). Keys use the same tape-string layout as tape_readout.
std::map<std::string, double> sequential_tape_distribution(const StateVector &psi, std::span<const size_t> order);

/// Projecting cell mu right after its pair step versus after the whole cycle: returns the
/// larger of the state-norm difference and the branch-probability difference. Throws
/// ImpossibleOutcome if the outcome cannot occur.
double postponement_residual(const MachineSpec &spec, SubsystemId mu, int outcome, size_t cycle = 1);

}  // namespace qturing

#endif
