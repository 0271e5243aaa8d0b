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

#include "qturing/state_space.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qturing/error.h"

namespace qturing {

namespace {

void check_num_memory_cells(size_t num_memory_cells) {
    if (num_memory_cells < 1 || num_memory_cells > kMaxMemoryCells) {
        throw Error(
            ErrorKind::InvalidDimension,
            "number of memory cells must be in [1, " + std::to_string(kMaxMemoryCells) + "], got " +
                std::to_string(num_memory_cells));
    }
}

void check_same_shape(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "state dimensions differ: " + std::to_string(a.dimension()) + " vs " + std::to_string(b.dimension()));
    }
}

}  // namespace

double BlochVector::length() const {
    return std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
}

StateVector StateVector::ground(size_t num_memory_cells) {
    return basis(num_memory_cells, 0);
}

StateVector StateVector::basis(size_t num_memory_cells, uint64_t index) {
    check_num_memory_cells(num_memory_cells);
    std::vector<Complex> amps(size_t{1} << (num_memory_cells + 1));
    if (index >= amps.size()) {
        throw Error(ErrorKind::OutOfRange, "basis index " + std::to_string(index) + " outside the state space");
    }
    amps[index] = 1.0;
    return StateVector(num_memory_cells, std::move(amps));
}

StateVector::StateVector(size_t num_memory_cells, std::vector<Complex> amplitudes)
    : num_memory_cells_(num_memory_cells), amplitudes_(std::move(amplitudes)) {
    check_num_memory_cells(num_memory_cells);
    if (amplitudes_.size() != (size_t{1} << (num_memory_cells + 1))) {
        throw Error(
            ErrorKind::InvalidDimension,
            "expected " + std::to_string(size_t{1} << (num_memory_cells + 1)) + " amplitudes, got " +
                std::to_string(amplitudes_.size()));
    }
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

void StateVector::scale(Complex factor) {
    for (auto &a : amplitudes_) {
        a *= factor;
    }
}

void StateVector::normalize() {
    double n = norm_squared();
    if (n == 0) {
        throw Error(ErrorKind::InvalidDimension, "cannot normalize the zero vector");
    }
    scale(1.0 / std::sqrt(n));
}

void StateVector::check_subsystem(SubsystemId id) const {
    if (id.value > num_memory_cells_) {
        throw Error(
            ErrorKind::OutOfRange,
            "subsystem " + std::to_string(id.value) + " outside [0, " + std::to_string(num_memory_cells_) + "]");
    }
}

uint64_t encode_basis(std::span<const int> bits) {
    if (bits.empty() || bits.size() > kMaxMemoryCells + 1) {
        throw Error(ErrorKind::InvalidDimension, "occupation list has invalid length " + std::to_string(bits.size()));
    }
    uint64_t index = 0;
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] != 0 && bits[k] != 1) {
            throw Error(
                ErrorKind::InvalidBit,
                "occupation of subsystem " + std::to_string(k) + " is " + std::to_string(bits[k]));
        }
        index |= uint64_t(bits[k]) << k;
    }
    return index;
}

std::vector<int> decode_basis(uint64_t index, size_t num_subsystems) {
    if (num_subsystems == 0 || num_subsystems > kMaxMemoryCells + 1 || (index >> num_subsystems) != 0) {
        throw Error(ErrorKind::OutOfRange, "index " + std::to_string(index) + " does not fit the subsystem count");
    }
    std::vector<int> bits(num_subsystems);
    for (size_t k = 0; k < num_subsystems; k++) {
        bits[k] = int((index >> k) & 1);
    }
    return bits;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    check_same_shape(a, b);
    Complex total = 0;
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (size_t k = 0; k < x.size(); k++) {
        total += std::conj(x[k]) * y[k];
    }
    return total;
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

bool equal_amplitudes(const StateVector &a, const StateVector &b, double tol) {
    check_same_shape(a, b);
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (size_t k = 0; k < x.size(); k++) {
        if (std::abs(x[k] - y[k]) > tol) {
            return false;
        }
    }
    return true;
}

Matrix2 reduced_density(const StateVector &psi, SubsystemId id) {
    psi.check_subsystem(id);
    uint64_t bit = id.mask();
    auto amps = psi.amplitudes();
    Matrix2 rho{};
    for (uint64_t k = 0; k < amps.size(); k++) {
        if (k & bit) {
            continue;
        }
        const Complex &a0 = amps[k];
        const Complex &a1 = amps[k | bit];
        rho[0][0] += std::norm(a0);
        rho[1][1] += std::norm(a1);
        rho[0][1] += a0 * std::conj(a1);
    }
    rho[1][0] = std::conj(rho[0][1]);
    return rho;
}

BlochVector bloch_from_density(const Matrix2 &rho) {
    return {
        2 * rho[0][1].real(),
        2 * rho[0][1].imag(),
        (rho[1][1] - rho[0][0]).real(),
    };
}

Matrix2 density_from_bloch(const BlochVector &k) {
    Matrix2 rho{};
    rho[0][0] = (1 - k.k3) / 2;
    rho[1][1] = (1 + k.k3) / 2;
    rho[0][1] = Complex(k.k1, k.k2) / 2.0;
    rho[1][0] = Complex(k.k1, -k.k2) / 2.0;
    return rho;
}

BlochVector bloch_vector(const StateVector &psi, SubsystemId id) {
    return bloch_from_density(reduced_density(psi, id));
}

double trace_distance(const Matrix2 &a, const Matrix2 &b) {
    double d00 = (a[0][0] - b[0][0]).real();
    double d11 = (a[1][1] - b[1][1]).real();
    Complex d01 = a[0][1] - b[0][1];
    double mid = (d00 + d11) / 2;
    double radius = std::sqrt((d00 - d11) * (d00 - d11) / 4 + std::norm(d01));
    return (std::abs(mid + radius) + std::abs(mid - radius)) / 2;
}

}  // namespace qturing
