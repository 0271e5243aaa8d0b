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

#include "qturing/histories.h"

#include <algorithm>
#include <cmath>

#include "qturing/error.h"
#include "qturing/gates.h"

namespace qturing {

namespace {

Matrix2 projector(const std::array<Complex, 2> &v) {
    Matrix2 out{};
    for (size_t a = 0; a < 2; a++) {
        for (size_t b = 0; b < 2; b++) {
            out[a][b] = v[a] * std::conj(v[b]);
        }
    }
    return out;
}

std::string tape_string(uint64_t basis_index, size_t num_cells) {
    std::string out(num_cells, '0');
    for (size_t k = 1; k <= num_cells; k++) {
        if ((basis_index >> k) & 1) {
            out[k - 1] = '1';
        }
    }
    return out;
}

void collect_sequential(
    const StateVector &psi, std::span<const size_t> order, size_t depth, double weight, std::string &tape,
    std::map<std::string, double> &out) {
    if (depth == order.size()) {
        out[tape] += weight;
        return;
    }
    auto cell = SubsystemId::memory(order[depth]);
    for (int outcome = 0; outcome < 2; outcome++) {
        if (outcome_probability(psi, cell, outcome) < kMinBranchProbability) {
            continue;
        }
        StateVector branch = psi;
        double p = project(branch, cell, outcome);
        tape[order[depth] - 1] = char('0' + outcome);
        collect_sequential(branch, order, depth + 1, weight * p, tape, out);
    }
}

}  // namespace

std::string format_history(std::span<const int> outcomes) {
    std::string out;
    out.reserve(outcomes.size());
    for (int o : outcomes) {
        out.push_back(o > 0 ? '+' : '-');
    }
    return out;
}

std::vector<HistoryBranch> enumerate_histories(const MachineSpec &spec, std::optional<size_t> depth) {
    if (spec.num_memory_cells() > kMaxMemoryCells) {
        throw Error(ErrorKind::SizeCap, "decision trees are capped at M = 20");
    }
    spec.validate();
    size_t levels = depth.value_or(spec.num_memory_cells());
    if (levels > spec.num_memory_cells()) {
        throw Error(ErrorKind::OutOfRange, "tree depth exceeds the number of memory cells");
    }

    std::vector<HistoryBranch> current(1);
    current[0].probability = 1;
    for (size_t nu = 0; nu < levels; nu++) {
        double alpha = spec.angles[nu].radians();
        double stay = std::cos(alpha / 2) * std::cos(alpha / 2);
        double flip = std::sin(alpha / 2) * std::sin(alpha / 2);
        std::vector<HistoryBranch> next;
        next.reserve(current.size() * 2);
        for (const auto &b : current) {
            // Branches only ever sit in a basis state, so the rotation's Born weights are
            // cos^2 (keep the level) and sin^2 (switch).
            int level = std::abs(b.final_head[1]) > 0.5 ? 1 : 0;
            for (int found = 0; found < 2; found++) {
                double p = b.probability * (found == level ? stay : flip);
                if (p < kMinBranchProbability) {
                    continue;
                }
                HistoryBranch child;
                child.outcomes = b.outcomes;
                child.outcomes.push_back(found ? +1 : -1);
                child.probability = p;
                child.final_head = found ? std::array<Complex, 2>{0.0, 1.0} : std::array<Complex, 2>{1.0, 0.0};
                next.push_back(std::move(child));
            }
        }
        current = std::move(next);
    }
    return current;
}

Matrix2 ensemble_density(std::span<const HistoryBranch> branches) {
    double total = 0;
    Matrix2 rho{};
    for (const auto &b : branches) {
        if (b.probability < 0) {
            throw Error(ErrorKind::OutOfRange, "negative branch probability");
        }
        total += b.probability;
        Matrix2 proj = projector(b.final_head);
        for (size_t a = 0; a < 2; a++) {
            for (size_t c = 0; c < 2; c++) {
                rho[a][c] += b.probability * proj[a][c];
            }
        }
    }
    if (std::abs(total - 1) > 1e-12) {
        throw Error(ErrorKind::OutOfRange, "branch probabilities sum to " + std::to_string(total) + ", not 1");
    }
    return rho;
}

double parallelism_residual(const MachineSpec &spec) {
    spec.validate();
    StateVector psi = StateVector::ground(spec.num_memory_cells());
    double worst = 0;
    for (size_t nu = 1; nu <= spec.num_memory_cells(); nu++) {
        apply_step(psi, spec, 2 * nu - 1);
        apply_step(psi, spec, 2 * nu);
        auto branches = enumerate_histories(spec, nu);
        worst = std::max(worst, trace_distance(reduced_density(psi, SubsystemId::head()), ensemble_density(branches)));
    }
    return worst;
}

std::vector<double> parallelism_diagnostic(const MachineSpec &spec, size_t cycles) {
    spec.validate();
    StateVector psi = StateVector::ground(spec.num_memory_cells());
    // The measured ensemble stays diagonal; track the weight of |1>.
    double excited = 0;
    std::vector<double> out;
    for (size_t m = 1; m <= cycles; m++) {
        double worst = 0;
        const auto &angles = spec.angles_for_cycle(m);
        for (size_t nu = 1; nu <= spec.num_memory_cells(); nu++) {
            apply_step(psi, spec, 2 * nu - 1, m);
            apply_step(psi, spec, 2 * nu, m);
            double s2 = std::pow(std::sin(angles[nu - 1].radians() / 2), 2);
            excited = excited * (1 - s2) + (1 - excited) * s2;
            Matrix2 ensemble{};
            ensemble[0][0] = 1 - excited;
            ensemble[1][1] = excited;
            worst = std::max(worst, trace_distance(reduced_density(psi, SubsystemId::head()), ensemble));
        }
        out.push_back(worst);
    }
    return out;
}

std::map<std::string, HistoryBranch> tape_readout(const MachineSpec &spec, size_t cycle) {
    if (cycle != 1) {
        throw Error(ErrorKind::Unsupported, "tape states identify head histories only at the end of cycle 1");
    }
    StateVector psi = run(spec, 1);
    size_t num_cells = spec.num_memory_cells();
    std::map<std::string, HistoryBranch> out;
    auto amps = psi.amplitudes();
    for (uint64_t s = 0; s < amps.size(); s += 2) {
        double p = std::norm(amps[s]) + std::norm(amps[s + 1]);
        if (p < kMinBranchProbability) {
            continue;
        }
        HistoryBranch branch;
        branch.probability = p;
        for (size_t k = 1; k <= num_cells; k++) {
            branch.outcomes.push_back(((s >> k) & 1) ? -1 : +1);
        }
        bool last_excited = branch.outcomes.back() > 0;
        branch.final_head = last_excited ? std::array<Complex, 2>{0.0, 1.0} : std::array<Complex, 2>{1.0, 0.0};
        out.emplace(tape_string(s, num_cells), std::move(branch));
    }
    return out;
}

std::map<std::string, double> sequential_tape_distribution(const StateVector &psi, std::span<const size_t> order) {
    size_t num_cells = psi.num_memory_cells();
    std::vector<size_t> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < sorted.size(); k++) {
        if (sorted.size() != num_cells || sorted[k] != k + 1) {
            throw Error(ErrorKind::OutOfRange, "measurement order must be a permutation of the memory cells");
        }
    }
    std::map<std::string, double> out;
    std::string tape(num_cells, '0');
    collect_sequential(psi, order, 0, 1.0, tape, out);
    return out;
}

double postponement_residual(const MachineSpec &spec, SubsystemId mu, int outcome, size_t cycle) {
    spec.validate();
    if (mu.is_head() || mu.value > spec.num_memory_cells()) {
        throw Error(ErrorKind::OutOfRange, "postponement applies to memory cells only");
    }
    StateVector start = StateVector::ground(spec.num_memory_cells());
    if (cycle > 1) {
        advance(start, spec, 1, cycle - 1);
    }

    StateVector early = start;
    double p_early = 0;
    for (size_t j = 1; j <= spec.steps_per_cycle(); j++) {
        apply_step(early, spec, j, cycle);
        if (j == 2 * mu.value) {
            p_early = project(early, mu, outcome);
        }
    }

    StateVector late = start;
    advance(late, spec, cycle, 1);
    double p_late = project(late, mu, outcome);

    double diff = 0;
    for (uint64_t s = 0; s < early.dimension(); s++) {
        diff += std::norm(early[s] - late[s]);
    }
    return std::max(std::sqrt(diff), std::abs(p_early - p_late));
}

}  // namespace qturing
