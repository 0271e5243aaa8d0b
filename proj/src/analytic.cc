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

#include "qturing/analytic.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "qturing/error.h"

namespace qturing {

namespace {

void check_cycle(size_t cycle) {
    if (cycle < 1) {
        throw Error(ErrorKind::OutOfRange, "cycle numbers start at 1");
    }
}

void check_angles(std::span<const double> angles) {
    if (angles.empty()) {
        throw Error(ErrorKind::InvalidDimension, "angle list must not be empty");
    }
}

void check_cell(size_t k, std::span<const double> angles) {
    check_angles(angles);
    if (k < 1 || k > angles.size()) {
        throw Error(
            ErrorKind::OutOfRange, "memory cell " + std::to_string(k) + " outside [1, " + std::to_string(angles.size()) + "]");
    }
}

/// prod_{i in [begin, end)} cos(factor * a_i)
double cos_product(std::span<const double> angles, size_t begin, size_t end, double factor) {
    double p = 1;
    for (size_t i = begin; i < end; i++) {
        p *= std::cos(factor * angles[i]);
    }
    return p;
}

bool is_even(size_t m) {
    return m % 2 == 0;
}

}  // namespace

double kappa(size_t cycle, std::span<const double> angles) {
    check_cycle(cycle);
    check_angles(angles);
    double m = double(cycle);
    double tail = is_even(cycle) ? 1.0 : cos_product(angles, 0, angles.size(), 1);
    return 0.5 * cos_product(angles, 0, angles.size(), m) + 0.5 * tail;
}

double kappa_s(size_t cycle, std::span<const double> angles) {
    check_cycle(cycle);
    check_angles(angles);
    double m = double(cycle);
    double lead = std::sin(m * angles[0]) * cos_product(angles, 1, angles.size(), m);
    double tail = is_even(cycle) ? 0.0 : -std::sin(angles[0]) * cos_product(angles, 1, angles.size(), 1);
    return 0.5 * lead + 0.5 * tail;
}

double phi(size_t cycle, size_t k, std::span<const double> angles) {
    check_cycle(cycle);
    check_cell(k, angles);
    double m = double(cycle);
    if (is_even(cycle)) {
        return -cos_product(angles, 0, angles.size(), m / 2);
    }
    return cos_product(angles, 0, k, (m + 1) / 2) * cos_product(angles, k, angles.size(), (m - 1) / 2);
}

double chi(size_t cycle, size_t k, std::span<const double> angles) {
    check_cycle(cycle);
    check_cell(k, angles);
    double m = double(cycle);
    if (is_even(cycle)) {
        return cos_product(angles, 0, angles.size(), m / 2);
    }
    return -cos_product(angles, 0, k, (m - 1) / 2) * cos_product(angles, k, angles.size(), (m + 1) / 2);
}

double zeno(size_t num_memory_cells) {
    if (num_memory_cells < 2) {
        throw Error(ErrorKind::OutOfRange, "the Zeno formula needs M >= 2");
    }
    double m = double(num_memory_cells);
    return -std::pow(std::cos(std::numbers::pi / m), m);
}

std::vector<ClusterIndex> standard_indices(size_t num_memory_cells) {
    size_t n = num_memory_cells + 1;
    auto head = SubsystemId::head();
    std::vector<ClusterIndex> out;
    out.push_back(ClusterIndex::single(n, head, Generator::L1));
    out.push_back(ClusterIndex::single(n, head, Generator::L2));
    out.push_back(ClusterIndex::single(n, head, Generator::L3));
    for (size_t k = 1; k <= num_memory_cells; k++) {
        out.push_back(ClusterIndex::single(n, SubsystemId::memory(k), Generator::L3));
    }
    for (size_t a = 1; a <= num_memory_cells; a++) {
        for (size_t b = a + 1; b <= num_memory_cells; b++) {
            out.push_back(
                ClusterIndex::pair(n, SubsystemId::memory(a), Generator::L3, SubsystemId::memory(b), Generator::L3));
        }
    }
    for (size_t k = 1; k <= num_memory_cells; k++) {
        out.push_back(ClusterIndex::pair(n, head, Generator::L3, SubsystemId::memory(k), Generator::L3));
    }
    return out;
}

PredictionSet predict(size_t cycle, const MachineSpec &spec) {
    spec.validate();
    check_cycle(cycle);
    if (!spec.is_uniform()) {
        throw Error(ErrorKind::Unsupported, "closed forms only cover machines with the same angles in every cycle");
    }
    std::vector<double> alpha = spec.radians();
    std::span<const double> all(alpha);
    size_t num_cells = alpha.size();
    size_t n = num_cells + 1;
    size_t end_step = spec.steps_per_cycle();
    auto head = SubsystemId::head();

    PredictionSet out;
    out.cycle = cycle;
    auto add = [&](ClusterIndex q, double v) {
        out.entries.push_back(CorrelationRecord{cycle, end_step, std::move(q), v, RecordSource::Analytic});
    };

    add(ClusterIndex::single(n, head, Generator::L1), 0.0);
    add(ClusterIndex::single(n, head, Generator::L2), kappa_s(cycle, all));
    add(ClusterIndex::single(n, head, Generator::L3), -kappa(cycle, all));
    for (size_t k = 1; k <= num_cells; k++) {
        add(ClusterIndex::single(n, SubsystemId::memory(k), Generator::L3), phi(cycle, k, all));
    }
    for (size_t a = 1; a <= num_cells; a++) {
        for (size_t b = a + 1; b <= num_cells; b++) {
            // Angles a+1..b sit at 0-based positions a..b-1.
            add(ClusterIndex::pair(n, SubsystemId::memory(a), Generator::L3, SubsystemId::memory(b), Generator::L3),
                kappa(cycle, all.subspan(a, b - a)));
        }
    }
    for (size_t k = 1; k <= num_cells; k++) {
        add(ClusterIndex::pair(n, head, Generator::L3, SubsystemId::memory(k), Generator::L3), chi(cycle, k, all));
    }
    return out;
}

std::vector<ClusterIndex> web_indices(size_t num_memory_cells) {
    size_t n = num_memory_cells + 1;
    std::vector<ClusterIndex> out;
    for (size_t k = 1; k <= num_memory_cells; k++) {
        auto cell = SubsystemId::memory(k);
        out.push_back(ClusterIndex::pair(n, SubsystemId::head(), Generator::L3, cell, Generator::L3));
        out.push_back(ClusterIndex::single(n, cell, Generator::L3));
    }
    return out;
}

double web_residual(std::span<const CorrelationRecord> records) {
    if (records.empty()) {
        throw Error(ErrorKind::MissingRecord, "no records supplied");
    }
    size_t cycle = records.front().cycle;
    size_t step = records.front().step;
    size_t n = records.front().index.size();
    std::map<ClusterIndex, double> by_index;
    for (const auto &r : records) {
        if (r.cycle != cycle || r.step != step) {
            throw Error(ErrorKind::Unsupported, "records span more than one (m, j)");
        }
        by_index[r.index] = r.value;
    }
    auto lookup = [&](const ClusterIndex &q) {
        auto it = by_index.find(q);
        if (it == by_index.end()) {
            throw Error(ErrorKind::MissingRecord, "missing record for index " + q.str());
        }
        return it->second;
    };
    auto indices = web_indices(n - 1);
    double lo = INFINITY;
    double hi = -INFINITY;
    for (size_t i = 0; i < indices.size(); i += 2) {
        double product = lookup(indices[i]) * lookup(indices[i + 1]);
        lo = std::min(lo, product);
        hi = std::max(hi, product);
    }
    return hi - lo;
}

}  // namespace qturing
