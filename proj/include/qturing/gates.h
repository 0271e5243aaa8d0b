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

#ifndef QTURING_GATES_H
#define QTURING_GATES_H

#include <variant>

#include "qturing/state_space.h"

namespace qturing {

/// Branches with less weight than this are treated as impossible by `project`.
inline constexpr double kMinBranchProbability = 1e-14;

/// Local head rotation about the 1-axis:
///   |0> -> cos(a/2)|0> - i sin(a/2)|1>,  |1> -> -i sin(a/2)|0> + cos(a/2)|1>.
void rotate_head(StateVector &psi, double alpha);

/// Zero-controlled NOT between the head and memory cell `mu`.
///
/// NOTE: the control polarity is inverted relative to the textbook CNOT. The target is
/// flipped when the head is in |0> (resonance) and left alone when the head is in |1>.
/// Throws OutOfRange when `mu` is the head or outside the ring.
void cnot(StateVector &psi, SubsystemId mu);

/// || [U(S,mu), U_alpha(S)] psi - sin(alpha/2) (1 - L1(mu)) L2(S) psi ||.
double commutator_residual(double alpha, SubsystemId mu, const StateVector &psi);

/// Projects subsystem `mu` onto local state |outcome> and renormalizes in place.
/// Returns the pre-collapse probability of the outcome. Throws ImpossibleOutcome when
/// that probability is below kMinBranchProbability (psi is then left untouched).
double project(StateVector &psi, SubsystemId mu, int outcome);

/// Probability of finding `mu` in |outcome> without collapsing.
double outcome_probability(const StateVector &psi, SubsystemId mu, int outcome);

struct HeadRotation {
    double alpha;
};
struct PairCnot {
    SubsystemId target;
};
struct Projection {
    SubsystemId site;
    int outcome;
};
using GateOp = std::variant<HeadRotation, PairCnot, Projection>;

/// Applies one operation; Projection's probability is discarded.
void apply(StateVector &psi, const GateOp &op);

}  // namespace qturing

#endif
