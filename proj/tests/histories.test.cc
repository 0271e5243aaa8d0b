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
#include <numbers>
#include <numeric>
#include <set>

#include "gtest/gtest.h"
#include "qturing/gates.h"
#include "qturing/machine.h"
#include "test_util.h"

using namespace qturing;
using qtest::error_kind_of;

namespace {

constexpr double kPi = std::numbers::pi;

MachineSpec float_machine(const std::vector<double> &angles) {
    MachineSpec spec;
    for (double a : angles) {
        spec.angles.push_back(PhaseAngle::from_radians(a));
    }
    return spec;
}

double total_probability(const std::vector<HistoryBranch> &branches) {
    double t = 0;
    for (const auto &b : branches) {
        t += b.probability;
    }
    return t;
}

/// Head-only Monte-Carlo-free oracle: evolve a 2-vector and its measurement record with
/// explicit 2x2 matrices.
double branch_probability_oracle(const std::vector<double> &angles, const std::vector<int> &outcomes) {
    qtest::Vec v(2);
    v << 1, 0;
    double p = 1;
    for (size_t k = 0; k < outcomes.size(); k++) {
        qtest::Mat r = qtest::head_rotation_op(angles[k], 1);
        v = r * v;
        int level = outcomes[k] > 0 ? 1 : 0;
        double w = std::norm(v(level));
        p *= w;
        qtest::Vec collapsed = qtest::Vec::Zero(2);
        collapsed(level) = 1;
        v = collapsed;
    }
    return p;
}

}  // namespace

TEST(format_history, signs) {
    std::vector<int> h{+1, +1, -1, -1};
    EXPECT_EQ(format_history(h), "++--");
}

TEST(enumerate_histories, examples) {
    auto still = enumerate_histories(float_machine({0, 0, 0, 0}));
    ASSERT_EQ(still.size(), 1u);
    EXPECT_EQ(still[0].outcomes, (std::vector<int>{-1, -1, -1, -1}));
    EXPECT_EQ(still[0].probability, 1);

    auto cat = enumerate_histories(MachineSpec::cat());
    ASSERT_EQ(cat.size(), 2u);
    std::set<std::string> names;
    for (const auto &b : cat) {
        EXPECT_NEAR(b.probability, 0.5, 1e-15);
        names.insert(format_history(b.outcomes));
    }
    EXPECT_EQ(names, (std::set<std::string>{"++++", "----"}));

    auto coin = enumerate_histories(MachineSpec::coin());
    ASSERT_EQ(coin.size(), 16u);
    std::set<std::string> coin_names;
    for (const auto &b : coin) {
        EXPECT_NEAR(b.probability, 1.0 / 16, 1e-15);
        coin_names.insert(format_history(b.outcomes));
    }
    EXPECT_EQ(coin_names.size(), 16u);

    EXPECT_EQ(error_kind_of([] { enumerate_histories(MachineSpec::coin(21)); }), ErrorKind::SizeCap);
    EXPECT_EQ(error_kind_of([] { enumerate_histories(MachineSpec::coin(), 5); }), ErrorKind::OutOfRange);
}

TEST(enumerate_histories, probabilities_match_head_only_oracle) {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> angle(0.1, kPi - 0.1);
    for (int trial = 0; trial < 10; trial++) {
        std::vector<double> angles{angle(rng), angle(rng), angle(rng), angle(rng), angle(rng)};
        auto branches = enumerate_histories(float_machine(angles));
        EXPECT_EQ(branches.size(), 32u);
        EXPECT_NEAR(total_probability(branches), 1, 1e-12);
        for (const auto &b : branches) {
            EXPECT_GE(b.probability, 0);
            EXPECT_NEAR(b.probability, branch_probability_oracle(angles, b.outcomes), 1e-14);
        }
    }
}

TEST(ensemble_density, examples) {
    auto single = enumerate_histories(float_machine({0, 0}));
    Matrix2 pure = ensemble_density(single);
    EXPECT_EQ(pure[0][0], Complex(1));
    EXPECT_EQ(pure[1][1], Complex(0));

    auto coin = enumerate_histories(MachineSpec::coin());
    Matrix2 mixed = ensemble_density(coin);
    EXPECT_NEAR(mixed[0][0].real(), 0.5, 1e-14);
    EXPECT_NEAR(mixed[1][1].real(), 0.5, 1e-14);
    EXPECT_NEAR(std::abs(mixed[0][1]), 0, 1e-15);

    auto zeno = enumerate_histories(MachineSpec::zeno(4));
    BlochVector k = bloch_from_density(ensemble_density(zeno));
    EXPECT_NEAR(k.k3, -0.25, 1e-12);
    // Explicit sum over branches: weight of the ground level minus the excited level.
    double explicit_k3 = 0;
    for (const auto &b : zeno) {
        explicit_k3 += b.probability * (b.outcomes.back() > 0 ? 1 : -1);
    }
    EXPECT_NEAR(k.k3, explicit_k3, 1e-14);

    std::vector<HistoryBranch> half(1);
    half[0].probability = 0.5;
    EXPECT_EQ(error_kind_of([&] { ensemble_density(half); }), ErrorKind::OutOfRange);
}

TEST(parallelism_residual, examples) {
    EXPECT_EQ(parallelism_residual(float_machine({0, 0, 0, 0})), 0);
    EXPECT_LE(parallelism_residual(MachineSpec::zeno(4)), 1e-12);
    EXPECT_LE(parallelism_residual(MachineSpec::cat()), 1e-12);

    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 10; trial++) {
        EXPECT_LE(parallelism_residual(random_rational_machine(6, 12, rng)), 1e-12);
    }
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 10; trial++) {
        EXPECT_LE(parallelism_residual(float_machine({angle(rng), angle(rng), angle(rng), angle(rng)})), 1e-12);
    }
}

TEST(parallelism_diagnostic, cycle_one_matches_residual) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 5; trial++) {
        auto spec = random_rational_machine(4, 12, rng);
        auto diag = parallelism_diagnostic(spec, 3);
        ASSERT_EQ(diag.size(), 3u);
        EXPECT_NEAR(diag[0], parallelism_residual(spec), 1e-12);
        for (double d : diag) {
            EXPECT_GE(d, 0);
            EXPECT_LE(d, 1 + 1e-12);
        }
    }
}

TEST(tape_readout, examples) {
    auto cat = tape_readout(MachineSpec::cat());
    ASSERT_EQ(cat.size(), 2u);
    ASSERT_TRUE(cat.count("1111"));
    ASSERT_TRUE(cat.count("0000"));
    EXPECT_EQ(format_history(cat["1111"].outcomes), "----");
    EXPECT_EQ(format_history(cat["0000"].outcomes), "++++");
    EXPECT_NEAR(cat["1111"].probability, 0.5, 1e-12);

    auto still = tape_readout(float_machine({0, 0, 0, 0}));
    ASSERT_EQ(still.size(), 1u);
    EXPECT_EQ(still.begin()->first, "1111");
    EXPECT_EQ(format_history(still.begin()->second.outcomes), "----");

    EXPECT_EQ(error_kind_of([] { tape_readout(MachineSpec::cat(), 2); }), ErrorKind::Unsupported);
}

TEST(tape_readout, probabilities_match_decision_tree) {
    std::vector<MachineSpec> specs{MachineSpec::zeno(4), MachineSpec::coin(), MachineSpec::zeno(6)};
    std::mt19937_64 rng(74);
    for (int k = 0; k < 5; k++) {
        specs.push_back(random_rational_machine(5, 12, rng));
    }
    for (const auto &spec : specs) {
        auto tape = tape_readout(spec);
        auto tree = enumerate_histories(spec);
        std::map<std::string, double> by_history;
        for (const auto &b : tree) {
            by_history[format_history(b.outcomes)] = b.probability;
        }
        EXPECT_EQ(tape.size(), tree.size());
        for (const auto &[bits, branch] : tape) {
            auto h = format_history(branch.outcomes);
            ASSERT_TRUE(by_history.count(h)) << bits;
            EXPECT_NEAR(branch.probability, by_history[h], 1e-12) << bits;
        }
    }
    EXPECT_EQ(tape_readout(MachineSpec::zeno(4)).size(), 16u);
}

TEST(sequential_tape_distribution, independent_of_measurement_order) {
    std::mt19937_64 rng(75);
    for (int trial = 0; trial < 5; trial++) {
        auto spec = random_rational_machine(4, 12, rng);
        StateVector psi = run(spec, 1);
        std::vector<size_t> order{1, 2, 3, 4};
        auto reference = sequential_tape_distribution(psi, order);
        auto tape = tape_readout(spec);
        for (const auto &[bits, branch] : tape) {
            EXPECT_NEAR(reference[bits], branch.probability, 1e-12);
        }
        while (std::next_permutation(order.begin(), order.end())) {
            auto d = sequential_tape_distribution(psi, order);
            ASSERT_EQ(d.size(), reference.size());
            for (const auto &[bits, p] : reference) {
                EXPECT_NEAR(d[bits], p, 1e-12);
            }
        }
    }
    std::vector<size_t> bad{1, 1, 2, 3};
    EXPECT_EQ(
        error_kind_of([&] { sequential_tape_distribution(StateVector::ground(4), bad); }), ErrorKind::OutOfRange);
}

TEST(postponement_residual, examples) {
    EXPECT_LE(postponement_residual(MachineSpec::cat(), SubsystemId::memory(1), 1), 1e-12);
    EXPECT_EQ(postponement_residual(float_machine({0, 0, 0, 0}), SubsystemId::memory(1), 1), 0);
    EXPECT_EQ(
        error_kind_of([] { postponement_residual(float_machine({0, 0, 0, 0}), SubsystemId::memory(1), 0); }),
        ErrorKind::ImpossibleOutcome);
    EXPECT_EQ(
        error_kind_of([] { postponement_residual(MachineSpec::cat(), SubsystemId::head(), 0); }),
        ErrorKind::OutOfRange);

    std::mt19937_64 rng(76);
    for (int trial = 0; trial < 10; trial++) {
        auto spec = random_rational_machine(4, 12, rng);
        for (size_t mu = 1; mu <= 4; mu++) {
            for (int outcome = 0; outcome < 2; outcome++) {
                try {
                    EXPECT_LE(postponement_residual(spec, SubsystemId::memory(mu), outcome), 1e-12);
                } catch (const Error &e) {
                    EXPECT_EQ(e.kind(), ErrorKind::ImpossibleOutcome);
                }
            }
        }
    }
}

TEST(postponement_residual, later_cycles) {
    std::mt19937_64 rng(77);
    auto spec = random_rational_machine(3, 12, rng);
    for (size_t cycle = 2; cycle <= 4; cycle++) {
        for (size_t mu = 1; mu <= 3; mu++) {
            try {
                EXPECT_LE(postponement_residual(spec, SubsystemId::memory(mu), 1, cycle), 1e-12);
            } catch (const Error &e) {
                EXPECT_EQ(e.kind(), ErrorKind::ImpossibleOutcome);
            }
        }
    }
}
