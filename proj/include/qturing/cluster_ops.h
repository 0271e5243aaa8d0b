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

#ifndef QTURING_CLUSTER_OPS_H
#define QTURING_CLUSTER_OPS_H

#include <Eigen/Dense>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qturing/state_space.h"

namespace qturing {

/// Local SU(2) generators in the (|0>, |1>) basis:
///   L1 = |0><1| + |1><0|
///   L2 = i|0><1| - i|1><0|   (the negative of the usual Pauli Y)
///   L3 = |1><1| - |0><0|     (the ground state |0> has eigenvalue -1)
enum class Generator : uint8_t {
    I = 0,
    L1 = 1,
    L2 = 2,
    L3 = 3,
};

Generator generator_from_int(int j);

/// Product of one generator per subsystem, head first. Text form is the digit
/// string used in correlation tables, e.g. "33000" for L3(S) L3(1).
class ClusterIndex {
   public:
    ClusterIndex() = default;
    explicit ClusterIndex(std::vector<Generator> entries);
    static ClusterIndex identity(size_t num_subsystems);
    static ClusterIndex single(size_t num_subsystems, SubsystemId site, Generator g);
    static ClusterIndex pair(size_t num_subsystems, SubsystemId a, Generator ga, SubsystemId b, Generator gb);
    /// Parses the digit form. Throws Parse on anything but [0-3]+.
    static ClusterIndex parse(std::string_view digits);

    size_t size() const {
        return entries_.size();
    }
    Generator operator[](size_t k) const {
        return entries_[k];
    }
    const std::vector<Generator> &entries() const {
        return entries_;
    }
    /// Number of non-identity factors.
    size_t order() const;
    std::string str() const;

    /// Bits flipped by L1/L2 factors.
    uint64_t flip_mask() const;
    /// Phase picked up by basis state |s> under the product, Q|s> = phase(s) |s ^ flip_mask>.
    Complex phase(uint64_t s) const;

    std::strong_ordering operator<=>(const ClusterIndex &other) const {
        return entries_ <=> other.entries_;
    }
    bool operator==(const ClusterIndex &other) const {
        return entries_ == other.entries_;
    }

   private:
    std::vector<Generator> entries_;
    uint64_t y_mask_ = 0;
    uint64_t z_mask_ = 0;
    uint64_t flip_mask_ = 0;
    Complex y_phase_ = 1;
};

void apply_generator(StateVector &psi, SubsystemId site, Generator g);
void apply_cluster(StateVector &psi, const ClusterIndex &q);

/// K = <psi|Q|psi>. Q is Hermitian so the imaginary part is discarded.
double expect_k(const StateVector &psi, const ClusterIndex &q);

/// Sparse expansion A = 2^-(M+1) sum_q A_q Q_q.
struct OperatorCoefficients {
    size_t num_subsystems = 0;
    std::map<ClusterIndex, Complex> entries;
};

/// Largest M accepted by the dense operator routines.
inline constexpr size_t kMaxDenseMemoryCells = 5;

/// A_q = Tr{A Q_q} for every q with |A_q| > drop_tol. Dense path, M <= 5.
OperatorCoefficients coefficients(const Eigen::MatrixXcd &a, double drop_tol = 1e-10);
Eigen::MatrixXcd reconstruct(const OperatorCoefficients &coeffs);
Eigen::MatrixXcd dense_cluster_operator(const ClusterIndex &q);

/// Symmetrized same-site correlation of two traceless operators supported only on `site`:
/// 2^-2(M+1) sum_{j=1..3} A_j B_j.
double correlation_c(const OperatorCoefficients &a, const OperatorCoefficients &b, SubsystemId site);

/// One entry of the Heisenberg transform X, 2^-(M+1) Tr{U^+ Q_row U Q_col}.
/// Throws NotUnitary if U^+U deviates from 1 by more than 1e-10, and Unsupported if
/// the trace is not real to 1e-10.
double transform_entry(const Eigen::MatrixXcd &u, const ClusterIndex &row, const ClusterIndex &col);

using LocalTransform = std::array<std::array<double, 4>, 4>;

/// X for the head rotation by `alpha`: a rotation in the (2,3) plane about axis 1.
LocalTransform local_x_matrix(double alpha);
LocalTransform compose(const LocalTransform &a, const LocalTransform &b);

}  // namespace qturing

#endif
