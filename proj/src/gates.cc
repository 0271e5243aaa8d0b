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

#include "qturing/gates.h"

#include <cmath>
#include <string>
#include <utility>

#include "qturing/cluster_ops.h"
#include "qturing/error.h"

namespace qturing {

namespace {

void check_memory_cell(const StateVector &psi, SubsystemId mu) {
    psi.check_subsystem(mu);
    if (mu.is_head()) {
        throw Error(ErrorKind::OutOfRange, "pair gate target must be a memory cell, not the head");
    }
}

void check_outcome(int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw Error(ErrorKind::InvalidBit, "projection outcome must be 0 or 1, got " + std::to_string(outcome));
    }
}

}  // namespace

void rotate_head(StateVector &psi, double alpha) {
    double c = std::cos(alpha / 2);
    Complex mis(0, -std::sin(alpha / 2));
    auto amps = psi.amplitudes();
    for (uint64_t s = 0; s < amps.size(); s += 2) {
        Complex a0 = amps[s];
        Complex a1 = amps[s + 1];
        amps[s] = c * a0 + mis * a1;
        amps[s + 1] = mis * a0 + c * a1;
    }
}

void cnot(StateVector &psi, SubsystemId mu) {
    check_memory_cell(psi, mu);
    uint64_t bit = mu.mask();
    auto amps = psi.amplitudes();
    // Even indices have the head in |0>.
    for (uint64_t s = 0; s < amps.size(); s += 2) {
        if (!(s & bit)) {
            std::swap(amps[s], amps[s | bit]);
        }
    }
}

double commutator_residual(double alpha, SubsystemId mu, const StateVector &psi) {
    check_memory_cell(psi, mu);

    StateVector cnot_then_rot = psi;
    cnot(cnot_then_rot, mu);
    rotate_head(cnot_then_rot, alpha);

    StateVector rot_then_cnot = psi;
    rotate_head(rot_then_cnot, alpha);
    cnot(rot_then_cnot, mu);

    StateVector rhs = psi;
    apply_generator(rhs, SubsystemId::head(), Generator::L2);
    StateVector flipped = rhs;
    apply_generator(flipped, mu, Generator::L1);

    double s = std::sin(alpha / 2);
    double total = 0;
    for (uint64_t k = 0; k < psi.dimension(); k++) {
        Complex lhs = rot_then_cnot[k] - cnot_then_rot[k];
        Complex expected = s * (rhs[k] - flipped[k]);
        total += std::norm(lhs - expected);
    }
    return std::sqrt(total);
}

double outcome_probability(const StateVector &psi, SubsystemId mu, int outcome) {
    psi.check_subsystem(mu);
    check_outcome(outcome);
    uint64_t bit = mu.mask();
    uint64_t want = outcome ? bit : 0;
    double p = 0;
    auto amps = psi.amplitudes();
    for (uint64_t s = 0; s < amps.size(); s++) {
        if ((s & bit) == want) {
            p += std::norm(amps[s]);
        }
    }
    return p;
}

double project(StateVector &psi, SubsystemId mu, int outcome) {
    double p = outcome_probability(psi, mu, outcome);
    if (p < kMinBranchProbability) {
        throw Error(
            ErrorKind::ImpossibleOutcome,
            "subsystem " + std::to_string(mu.value) + " has probability " + std::to_string(p) + " for outcome " +
                std::to_string(outcome));
    }
    uint64_t bit = mu.mask();
    uint64_t want = outcome ? bit : 0;
    double inv = 1.0 / std::sqrt(p);
    auto amps = psi.amplitudes();
    for (uint64_t s = 0; s < amps.size(); s++) {
        amps[s] = (s & bit) == want ? amps[s] * inv : Complex(0);
    }
    return p;
}

void apply(StateVector &psi, const GateOp &op) {
    struct Visitor {
        StateVector &psi;
        void operator()(const HeadRotation &g) const {
            rotate_head(psi, g.alpha);
        }
        void operator()(const PairCnot &g) const {
            cnot(psi, g.target);
        }
        void operator()(const Projection &g) const {
            project(psi, g.site, g.outcome);
        }
    };
    std::visit(Visitor{psi}, op);
}

}  // namespace qturing
