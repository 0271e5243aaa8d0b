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

#ifndef QTURING_MACHINE_H
#define QTURING_MACHINE_H

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qturing/state_space.h"

namespace qturing {

/// A head rotation angle. Either an exact fraction of a full turn (2 pi num / den,
/// stored reduced with den >= 1) or a raw radian value. Only exact angles take part
/// in period detection.
class PhaseAngle {
   public:
    PhaseAngle() = default;
    static PhaseAngle turns(int64_t num, int64_t den);
    static PhaseAngle from_radians(double radians);

    double radians() const;
    bool is_exact() const {
        return exact_;
    }
    int64_t turn_numerator() const {
        return num_;
    }
    /// Denominator of the reduced turn fraction; 1 for a zero angle.
    int64_t turn_denominator() const {
        return den_;
    }
    std::string str() const;

    bool operator==(const PhaseAngle &) const = default;

   private:
    bool exact_ = true;
    int64_t num_ = 0;
    int64_t den_ = 1;
    double radians_ = 0;
};

struct MachineSpec {
    std::vector<PhaseAngle> angles;
    /// g in alpha = g t; only affects the schedule.
    double coupling = 1.0;
    /// Optional per-cycle replacements for `angles`; entry m-1 applies to cycle m,
    /// later cycles fall back to `angles`.
    std::vector<std::vector<PhaseAngle>> cycle_angles;

    size_t num_memory_cells() const {
        return angles.size();
    }
    size_t steps_per_cycle() const {
        return 2 * angles.size();
    }
    bool is_uniform() const {
        return cycle_angles.empty();
    }
    const std::vector<PhaseAngle> &angles_for_cycle(size_t cycle) const;
    std::vector<double> radians() const;
    /// Throws InvalidDimension / OutOfRange on a malformed spec.
    void validate() const;

    /// alpha_mu = pi / M for all mu.
    static MachineSpec zeno(size_t num_memory_cells);
    /// alpha_mu = pi / 2 for all mu.
    static MachineSpec coin(size_t num_memory_cells = 4);
    /// alpha_1 = pi / 2, all others 0.
    static MachineSpec cat(size_t num_memory_cells = 4);
};

struct StepLabel {
    size_t cycle;
    /// 0..2M; 0 labels the state before the first step of the cycle.
    size_t step;
    bool operator==(const StepLabel &) const = default;
};

/// Called synchronously after every step with the state at that point.
using SnapshotHook = std::function<void(StepLabel, const StateVector &)>;

/// Applies step j of `cycle`: odd j = 2mu-1 rotates the head by alpha_mu, even j = 2mu
/// applies the zero-controlled NOT onto memory cell mu.
void apply_step(StateVector &psi, const MachineSpec &spec, size_t step, size_t cycle = 1);

/// Runs cycles first_cycle .. first_cycle + num_cycles - 1 on `psi`.
void advance(
    StateVector &psi, const MachineSpec &spec, size_t first_cycle, size_t num_cycles, const SnapshotHook &hook = {});

/// Runs `cycles` full cycles from the ground state.
StateVector run(const MachineSpec &spec, size_t cycles, const SnapshotHook &hook = {});

/// Pulse-end times T_0..T_2M of one cycle; the pair gates take no time.
struct Schedule {
    std::vector<double> times;
};
Schedule schedule(const MachineSpec &spec);

/// Upper limit on the number of cycles scanned by `period`.
inline constexpr size_t kPeriodScanCap = 65536;

/// Upper limit on amplitude updates (cycles x steps x dimension) spent by `period`.
inline constexpr double kPeriodWorkBudget = 4.0e9;

/// Largest cycle count `period` will scan for this spec: kPeriodScanCap, reduced so the
/// scan stays within kPeriodWorkBudget.
uint64_t period_scan_limit(const MachineSpec &spec);

/// The arithmetic guess: smallest even common multiple of the turn denominators.
/// Empty when any angle is inexact or the spec varies per cycle.
std::optional<uint64_t> period_candidate(const MachineSpec &spec);

/// Smallest multiple p of `period_candidate` (p <= period_scan_limit) after which the
/// state ray returns to the initial ground ray. Empty if there is no candidate or no
/// multiple within the limit recurs.
std::optional<uint64_t> period(const MachineSpec &spec, double tol = kDefaultTolerance);

/// Uniform machine whose angles are 2 pi n / d with d drawn from [1, max_denominator] and
/// n from [0, d).
MachineSpec random_rational_machine(size_t num_memory_cells, int64_t max_denominator, std::mt19937_64 &rng);

}  // namespace qturing

#endif
