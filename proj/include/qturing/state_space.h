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

#ifndef QTURING_STATE_SPACE_H
#define QTURING_STATE_SPACE_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qturing {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-12;

/// Largest supported ring; the dense amplitude vector then has 2^21 entries.
inline constexpr size_t kMaxMemoryCells = 20;

/// One of the M+1 two-level systems. Index 0 is the head S, 1..M are the memory cells.
///
/// In the single-index basis the subsystem with id k owns bit k, so the head is the
/// least significant bit and |1> = |0...001> is "head excited, tape empty".
struct SubsystemId {
    size_t value;

    constexpr explicit SubsystemId(size_t v) : value(v) {
    }
    static constexpr SubsystemId head() {
        return SubsystemId(0);
    }
    static constexpr SubsystemId memory(size_t mu) {
        return SubsystemId(mu);
    }
    constexpr bool is_head() const {
        return value == 0;
    }
    constexpr uint64_t mask() const {
        return uint64_t{1} << value;
    }
    constexpr bool operator==(const SubsystemId &) const = default;
};

struct BlochVector {
    double k1 = 0;
    double k2 = 0;
    double k3 = 0;

    double length() const;
};

/// 2x2 complex matrix in the local (|0>, |1>) ordering.
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Pure state of the head plus M memory cells, stored densely.
class StateVector {
   public:
    /// |0...0>, every subsystem in its local ground state.
    static StateVector ground(size_t num_memory_cells);
    static StateVector basis(size_t num_memory_cells, uint64_t index);
    /// Takes ownership of explicit amplitudes. The length must be 2^(M+1); normalization
    /// is the caller's business (see `normalized`).
    StateVector(size_t num_memory_cells, std::vector<Complex> amplitudes);

    size_t num_memory_cells() const {
        return num_memory_cells_;
    }
    size_t num_subsystems() const {
        return num_memory_cells_ + 1;
    }
    size_t dimension() const {
        return amplitudes_.size();
    }

    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    std::span<Complex> amplitudes() {
        return amplitudes_;
    }
    const Complex &operator[](uint64_t index) const {
        return amplitudes_[index];
    }
    Complex &operator[](uint64_t index) {
        return amplitudes_[index];
    }

    double norm_squared() const;
    bool is_normalized(double tol = kDefaultTolerance) const;
    void scale(Complex factor);
    void normalize();

    /// Throws OutOfRange unless 0 <= id <= M.
    void check_subsystem(SubsystemId id) const;

    bool operator==(const StateVector &other) const = default;

   private:
    size_t num_memory_cells_;
    std::vector<Complex> amplitudes_;
};

/// Packs per-subsystem occupations (head first) into the single index
/// s = p(S) + 2 q(1) + 4 r(2) + ...
uint64_t encode_basis(std::span<const int> bits);
std::vector<int> decode_basis(uint64_t index, size_t num_subsystems);

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const StateVector &a, const StateVector &b);

/// Ray comparison: true iff |<a|b>| >= 1 - tol.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol = kDefaultTolerance);

/// Amplitude-exact comparison (no phase freedom), max-abs difference <= tol.
bool equal_amplitudes(const StateVector &a, const StateVector &b, double tol = kDefaultTolerance);

BlochVector bloch_vector(const StateVector &psi, SubsystemId id);
Matrix2 reduced_density(const StateVector &psi, SubsystemId id);

/// (1 + k1 l1 + k2 l2 + k3 l3) / 2 with the generator conventions of cluster_ops.h.
Matrix2 density_from_bloch(const BlochVector &k);
BlochVector bloch_from_density(const Matrix2 &rho);

/// Half the trace norm of (a - b), for Hermitian 2x2 inputs.
double trace_distance(const Matrix2 &a, const Matrix2 &b);

}  // namespace qturing

#endif
