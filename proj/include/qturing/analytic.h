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

#ifndef QTURING_ANALYTIC_H
#define QTURING_ANALYTIC_H

#include <span>
#include <vector>

#include "qturing/machine.h"
#include "qturing/records.h"

namespace qturing {

// Closed-form end-of-cycle correlations. Every function below costs O(M) arithmetic and
// does not depend on the cycle number beyond evaluating cos(m alpha); no state vector is
// built. Empty products are 1.

/// kappa^(m)(a_1..a_j) = 1/2 prod cos(m a_i) + 1/2 (1 if m even, prod cos(a_i) if m odd).
double kappa(size_t cycle, std::span<const double> angles);

/// kappa with cos(m a_1) -> sin(m a_1), cos(a_1) -> -sin(a_1) and the even-cycle constant
/// 1 -> 0.
double kappa_s(size_t cycle, std::span<const double> angles);

/// Memory one-point K_3 of cell k (1-based) at the end of cycle m.
double phi(size_t cycle, size_t k, std::span<const double> angles);

/// Head/memory pair K_{3..3..} of cell k at the end of cycle m.
double chi(size_t cycle, size_t k, std::span<const double> angles);

/// Head K_3 after one cycle of the Zeno machine, -cos^M(pi/M). Requires M >= 2.
double zeno(size_t num_memory_cells);

/// Indices covered by `predict`, in this order: head L1, L2, L3; memory L3 one-points;
/// memory L3 pairs (a < b); head-memory L3 pairs.
std::vector<ClusterIndex> standard_indices(size_t num_memory_cells);

struct PredictionSet {
    size_t cycle = 0;
    std::vector<CorrelationRecord> entries;
};

/// Closed-form values at (m, 2M) for every standard index. The memory pair (a, b) uses
/// kappa over the angles a+1..b, i.e. the rotations between the two visits. Throws
/// Unsupported for specs with per-cycle angles.
PredictionSet predict(size_t cycle, const MachineSpec &spec);

/// The pairs (K_{3..3_k..}, K_{0..3_k..}) entering the product identity, for all k.
std::vector<ClusterIndex> web_indices(size_t num_memory_cells);

/// Spread max_k - min_k of K_{3..3_k..} * K_{0..3_k..} over all memory cells k. The
/// records must come from a single (m, j) and cover `web_indices`; throws MissingRecord
/// otherwise.
double web_residual(std::span<const CorrelationRecord> records);

}  // namespace qturing

#endif
