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

#include "qturing/cluster_ops.h"

#include <bit>
#include <cmath>

#include "qturing/error.h"

namespace qturing {

namespace {

constexpr Complex kI(0, 1);

void check_index_fits(const StateVector &psi, const ClusterIndex &q) {
    if (q.size() != psi.num_subsystems()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "cluster index " + q.str() + " has " + std::to_string(q.size()) + " entries, state has " +
                std::to_string(psi.num_subsystems()) + " subsystems");
    }
}

size_t dense_memory_cells(const Eigen::MatrixXcd &a) {
    auto dim = size_t(a.rows());
    if (a.rows() != a.cols() || dim < 4 || !std::has_single_bit(dim)) {
        throw Error(ErrorKind::InvalidDimension, "operator must be square with power-of-two dimension >= 4");
    }
    size_t m = size_t(std::countr_zero(dim)) - 1;
    if (m > kMaxDenseMemoryCells) {
        throw Error(ErrorKind::SizeCap, "dense operator routines are capped at M = 5");
    }
    return m;
}

}  // namespace

Generator generator_from_int(int j) {
    if (j < 0 || j > 3) {
        throw Error(ErrorKind::OutOfRange, "generator index " + std::to_string(j) + " not in {0,1,2,3}");
    }
    return Generator(j);
}

ClusterIndex::ClusterIndex(std::vector<Generator> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() > kMaxMemoryCells + 1) {
        throw Error(ErrorKind::InvalidDimension, "cluster index length out of range");
    }
    size_t num_y = 0;
    for (size_t k = 0; k < entries_.size(); k++) {
        uint64_t bit = uint64_t{1} << k;
        switch (entries_[k]) {
            case Generator::I:
                break;
            case Generator::L1:
                flip_mask_ |= bit;
                break;
            case Generator::L2:
                flip_mask_ |= bit;
                y_mask_ |= bit;
                num_y++;
                break;
            case Generator::L3:
                z_mask_ |= bit;
                break;
            default:
                throw Error(ErrorKind::OutOfRange, "generator value out of range");
        }
    }
    static constexpr std::array<Complex, 4> powers_of_i{Complex(1, 0), kI, Complex(-1, 0), -kI};
    y_phase_ = powers_of_i[num_y % 4];
}

ClusterIndex ClusterIndex::identity(size_t num_subsystems) {
    return ClusterIndex(std::vector<Generator>(num_subsystems, Generator::I));
}

ClusterIndex ClusterIndex::single(size_t num_subsystems, SubsystemId site, Generator g) {
    if (site.value >= num_subsystems) {
        throw Error(ErrorKind::OutOfRange, "site outside cluster index");
    }
    std::vector<Generator> e(num_subsystems, Generator::I);
    e[site.value] = g;
    return ClusterIndex(std::move(e));
}

ClusterIndex ClusterIndex::pair(size_t num_subsystems, SubsystemId a, Generator ga, SubsystemId b, Generator gb) {
    if (a.value >= num_subsystems || b.value >= num_subsystems || a == b) {
        throw Error(ErrorKind::OutOfRange, "pair sites must be distinct and inside the cluster index");
    }
    std::vector<Generator> e(num_subsystems, Generator::I);
    e[a.value] = ga;
    e[b.value] = gb;
    return ClusterIndex(std::move(e));
}

ClusterIndex ClusterIndex::parse(std::string_view digits) {
    if (digits.empty()) {
        throw Error(ErrorKind::Parse, "empty cluster index");
    }
    std::vector<Generator> e;
    e.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '3') {
            throw Error(ErrorKind::Parse, "cluster index '" + std::string(digits) + "' must use digits 0-3");
        }
        e.push_back(Generator(c - '0'));
    }
    return ClusterIndex(std::move(e));
}

size_t ClusterIndex::order() const {
    size_t c = 0;
    for (auto g : entries_) {
        c += g != Generator::I;
    }
    return c;
}

std::string ClusterIndex::str() const {
    std::string out;
    out.reserve(entries_.size());
    for (auto g : entries_) {
        out.push_back(char('0' + int(g)));
    }
    return out;
}

uint64_t ClusterIndex::flip_mask() const {
    return flip_mask_;
}

Complex ClusterIndex::phase(uint64_t s) const {
    // L2 contributes -i on a local 0 and +i on a local 1; L3 contributes -1 on a local 0.
    bool negate = std::popcount(~s & (y_mask_ | z_mask_)) & 1;
    return negate ? -y_phase_ : y_phase_;
}

void apply_generator(StateVector &psi, SubsystemId site, Generator g) {
    psi.check_subsystem(site);
    apply_cluster(psi, ClusterIndex::single(psi.num_subsystems(), site, g));
}

void apply_cluster(StateVector &psi, const ClusterIndex &q) {
    check_index_fits(psi, q);
    auto amps = psi.amplitudes();
    uint64_t flip = q.flip_mask();
    if (flip == 0) {
        for (uint64_t s = 0; s < amps.size(); s++) {
            amps[s] *= q.phase(s);
        }
        return;
    }
    for (uint64_t s = 0; s < amps.size(); s++) {
        uint64_t t = s ^ flip;
        if (t < s) {
            continue;
        }
        Complex a = amps[s];
        Complex b = amps[t];
        amps[t] = q.phase(s) * a;
        amps[s] = q.phase(t) * b;
    }
}

double expect_k(const StateVector &psi, const ClusterIndex &q) {
    check_index_fits(psi, q);
    auto amps = psi.amplitudes();
    uint64_t flip = q.flip_mask();
    Complex total = 0;
    for (uint64_t s = 0; s < amps.size(); s++) {
        total += std::conj(amps[s ^ flip]) * q.phase(s) * amps[s];
    }
    return total.real();
}

Eigen::MatrixXcd dense_cluster_operator(const ClusterIndex &q) {
    if (q.size() > kMaxDenseMemoryCells + 1) {
        throw Error(ErrorKind::SizeCap, "dense operator routines are capped at M = 5");
    }
    Eigen::Index dim = Eigen::Index{1} << q.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (uint64_t s = 0; s < uint64_t(dim); s++) {
        out(Eigen::Index(s ^ q.flip_mask()), Eigen::Index(s)) = q.phase(s);
    }
    return out;
}

OperatorCoefficients coefficients(const Eigen::MatrixXcd &a, double drop_tol) {
    size_t n = dense_memory_cells(a) + 1;
    OperatorCoefficients out{n, {}};
    std::vector<Generator> digits(n, Generator::I);
    uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t code = 0; code < total; code++) {
        for (size_t k = 0; k < n; k++) {
            digits[k] = Generator((code >> (2 * k)) & 3);
        }
        ClusterIndex q(digits);
        // Tr{A Q} = sum_s A[s, s^flip] phase(s), since Q|s> = phase(s)|s^flip>.
        Complex tr = 0;
        for (uint64_t s = 0; s < uint64_t(a.rows()); s++) {
            tr += a(Eigen::Index(s), Eigen::Index(s ^ q.flip_mask())) * q.phase(s);
        }
        if (std::abs(tr) > drop_tol) {
            out.entries.emplace(std::move(q), tr);
        }
    }
    return out;
}

Eigen::MatrixXcd reconstruct(const OperatorCoefficients &coeffs) {
    if (coeffs.num_subsystems < 2 || coeffs.num_subsystems > kMaxDenseMemoryCells + 1) {
        throw Error(ErrorKind::SizeCap, "dense operator routines are capped at M = 5");
    }
    Eigen::Index dim = Eigen::Index{1} << coeffs.num_subsystems;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[q, value] : coeffs.entries) {
        out += value * dense_cluster_operator(q);
    }
    return out / double(dim);
}

double correlation_c(const OperatorCoefficients &a, const OperatorCoefficients &b, SubsystemId site) {
    if (a.num_subsystems != b.num_subsystems || a.num_subsystems == 0) {
        throw Error(ErrorKind::DimensionMismatch, "operators live on different spaces");
    }
    if (site.value >= a.num_subsystems) {
        throw Error(ErrorKind::OutOfRange, "site outside the operator space");
    }
    auto local_vector = [&](const OperatorCoefficients &c) {
        std::array<Complex, 4> v{};
        for (const auto &[q, value] : c.entries) {
            if (q.order() != 1 || q[site.value] == Generator::I) {
                throw Error(
                    ErrorKind::Unsupported,
                    "coefficient " + q.str() + " lies outside the traceless part of site " +
                        std::to_string(site.value));
            }
            v[size_t(q[site.value])] = value;
        }
        return v;
    };
    auto va = local_vector(a);
    auto vb = local_vector(b);
    Complex dot = 0;
    for (size_t j = 1; j <= 3; j++) {
        dot += va[j] * vb[j];
    }
    double dim = std::ldexp(1.0, int(a.num_subsystems));
    return dot.real() / (dim * dim);
}

double transform_entry(const Eigen::MatrixXcd &u, const ClusterIndex &row, const ClusterIndex &col) {
    size_t n = dense_memory_cells(u) + 1;
    if (row.size() != n || col.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "cluster indices do not match the operator dimension");
    }
    Eigen::MatrixXcd gram = u.adjoint() * u;
    double defect = (gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
    if (defect > 1e-10) {
        throw Error(ErrorKind::NotUnitary, "U^+U deviates from identity by " + std::to_string(defect));
    }
    Complex tr = (u.adjoint() * dense_cluster_operator(row) * u * dense_cluster_operator(col)).trace();
    tr /= double(u.rows());
    if (std::abs(tr.imag()) > 1e-10) {
        throw Error(ErrorKind::Unsupported, "transform entry has imaginary part " + std::to_string(tr.imag()));
    }
    return tr.real();
}

LocalTransform local_x_matrix(double alpha) {
    double c = std::cos(alpha);
    double s = std::sin(alpha);
    LocalTransform x{};
    x[0][0] = 1;
    x[1][1] = 1;
    x[2][2] = c;
    x[3][3] = c;
    x[3][2] = s;
    x[2][3] = -s;
    return x;
}

LocalTransform compose(const LocalTransform &a, const LocalTransform &b) {
    LocalTransform out{};
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            for (size_t k = 0; k < 4; k++) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

}  // namespace qturing
