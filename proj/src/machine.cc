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

#include "qturing/machine.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qturing/error.h"
#include "qturing/gates.h"

namespace qturing {

PhaseAngle PhaseAngle::turns(int64_t num, int64_t den) {
    if (den == 0) {
        throw Error(ErrorKind::OutOfRange, "turn fraction with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num, den);
    PhaseAngle a;
    a.exact_ = true;
    a.num_ = g ? num / g : 0;
    a.den_ = g ? den / g : 1;
    if (a.num_ == 0) {
        a.den_ = 1;
    }
    a.radians_ = 2 * std::numbers::pi * double(a.num_) / double(a.den_);
    return a;
}

PhaseAngle PhaseAngle::from_radians(double radians) {
    PhaseAngle a;
    a.exact_ = false;
    a.num_ = 0;
    a.den_ = 0;
    a.radians_ = radians;
    return a;
}

double PhaseAngle::radians() const {
    return radians_;
}

std::string PhaseAngle::str() const {
    std::ostringstream out;
    if (!exact_) {
        out.precision(17);
        out << radians_;
        return out.str();
    }
    if (num_ == 0) {
        return "0";
    }
    // 2 pi num / den as (2 num / den) pi, reduced.
    int64_t n = 2 * num_;
    int64_t d = den_;
    int64_t g = std::gcd(n, d);
    n /= g;
    d /= g;
    if (n == -1) {
        out << "-";
    } else if (n != 1) {
        out << n;
    }
    out << "pi";
    if (d != 1) {
        out << "/" << d;
    }
    return out.str();
}

const std::vector<PhaseAngle> &MachineSpec::angles_for_cycle(size_t cycle) const {
    if (cycle >= 1 && cycle - 1 < cycle_angles.size()) {
        return cycle_angles[cycle - 1];
    }
    return angles;
}

std::vector<double> MachineSpec::radians() const {
    std::vector<double> out;
    out.reserve(angles.size());
    for (const auto &a : angles) {
        out.push_back(a.radians());
    }
    return out;
}

void MachineSpec::validate() const {
    if (angles.empty() || angles.size() > kMaxMemoryCells) {
        throw Error(
            ErrorKind::InvalidDimension,
            "machine needs between 1 and " + std::to_string(kMaxMemoryCells) + " memory cells, got " +
                std::to_string(angles.size()));
    }
    for (size_t m = 0; m < cycle_angles.size(); m++) {
        if (cycle_angles[m].size() != angles.size()) {
            throw Error(
                ErrorKind::InvalidDimension, "angle override for cycle " + std::to_string(m + 1) + " has wrong length");
        }
    }
    if (!(coupling > 0) || !std::isfinite(coupling)) {
        throw Error(ErrorKind::OutOfRange, "coupling constant must be positive");
    }
}

MachineSpec MachineSpec::zeno(size_t num_memory_cells) {
    // pi / M = 2 pi / (2M)
    MachineSpec spec;
    spec.angles.assign(num_memory_cells, PhaseAngle::turns(1, 2 * int64_t(num_memory_cells)));
    return spec;
}

MachineSpec MachineSpec::coin(size_t num_memory_cells) {
    MachineSpec spec;
    spec.angles.assign(num_memory_cells, PhaseAngle::turns(1, 4));
    return spec;
}

MachineSpec MachineSpec::cat(size_t num_memory_cells) {
    MachineSpec spec;
    spec.angles.assign(num_memory_cells, PhaseAngle::turns(0, 1));
    if (!spec.angles.empty()) {
        spec.angles[0] = PhaseAngle::turns(1, 4);
    }
    return spec;
}

void apply_step(StateVector &psi, const MachineSpec &spec, size_t step, size_t cycle) {
    if (psi.num_memory_cells() != spec.num_memory_cells()) {
        throw Error(ErrorKind::DimensionMismatch, "state and machine disagree on the number of memory cells");
    }
    if (step < 1 || step > spec.steps_per_cycle()) {
        throw Error(
            ErrorKind::OutOfRange,
            "step " + std::to_string(step) + " outside [1, " + std::to_string(spec.steps_per_cycle()) + "]");
    }
    size_t mu = (step + 1) / 2;
    if (step % 2 == 1) {
        rotate_head(psi, spec.angles_for_cycle(cycle)[mu - 1].radians());
    } else {
        cnot(psi, SubsystemId::memory(mu));
    }
}

void advance(
    StateVector &psi, const MachineSpec &spec, size_t first_cycle, size_t num_cycles, const SnapshotHook &hook) {
    spec.validate();
    if (first_cycle < 1) {
        throw Error(ErrorKind::OutOfRange, "cycles are numbered from 1");
    }
    for (size_t m = first_cycle; m < first_cycle + num_cycles; m++) {
        for (size_t j = 1; j <= spec.steps_per_cycle(); j++) {
            apply_step(psi, spec, j, m);
            if (hook) {
                hook(StepLabel{m, j}, psi);
            }
        }
    }
}

StateVector run(const MachineSpec &spec, size_t cycles, const SnapshotHook &hook) {
    spec.validate();
    if (cycles < 1) {
        throw Error(ErrorKind::OutOfRange, "need at least one cycle");
    }
    StateVector psi = StateVector::ground(spec.num_memory_cells());
    advance(psi, spec, 1, cycles, hook);
    return psi;
}

Schedule schedule(const MachineSpec &spec) {
    spec.validate();
    Schedule out;
    out.times.reserve(spec.steps_per_cycle() + 1);
    out.times.push_back(0);
    double t = 0;
    for (const auto &a : spec.angles) {
        t += a.radians() / spec.coupling;
        out.times.push_back(t);  // end of the rotation pulse, T_{2mu-1}
        out.times.push_back(t);  // the pair gate is instantaneous, T_{2mu}
    }
    return out;
}

std::optional<uint64_t> period_candidate(const MachineSpec &spec) {
    if (!spec.is_uniform()) {
        return std::nullopt;
    }
    uint64_t l = 1;
    for (const auto &a : spec.angles) {
        if (!a.is_exact()) {
            return std::nullopt;
        }
        l = std::lcm(l, uint64_t(a.turn_denominator()));
        if (l > (uint64_t{1} << 40)) {
            return std::nullopt;
        }
    }
    return l % 2 == 0 ? l : 2 * l;
}

uint64_t period_scan_limit(const MachineSpec &spec) {
    double per_cycle = double(spec.steps_per_cycle()) * std::ldexp(1.0, int(spec.num_memory_cells() + 1));
    double affordable = std::floor(kPeriodWorkBudget / per_cycle);
    return affordable >= double(kPeriodScanCap) ? kPeriodScanCap : uint64_t(affordable);
}

std::optional<uint64_t> period(const MachineSpec &spec, double tol) {
    spec.validate();
    auto seed = period_candidate(spec);
    uint64_t limit = period_scan_limit(spec);
    if (!seed || *seed > limit) {
        return std::nullopt;
    }
    StateVector initial = StateVector::ground(spec.num_memory_cells());
    StateVector psi = initial;
    size_t done = 0;
    for (uint64_t p = *seed; p <= limit; p += *seed) {
        advance(psi, spec, done + 1, p - done);
        done = p;
        if (equal_up_to_global_phase(psi, initial, tol)) {
            return p;
        }
    }
    return std::nullopt;
}

MachineSpec random_rational_machine(size_t num_memory_cells, int64_t max_denominator, std::mt19937_64 &rng) {
    if (max_denominator < 1) {
        throw Error(ErrorKind::OutOfRange, "max_denominator must be >= 1");
    }
    std::uniform_int_distribution<int64_t> den_dist(1, max_denominator);
    MachineSpec spec;
    for (size_t k = 0; k < num_memory_cells; k++) {
        int64_t den = den_dist(rng);
        std::uniform_int_distribution<int64_t> num_dist(0, den - 1);
        spec.angles.push_back(PhaseAngle::turns(num_dist(rng), den));
    }
    spec.validate();
    return spec;
}

}  // namespace qturing
