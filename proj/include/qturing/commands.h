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

#ifndef QTURING_COMMANDS_H
#define QTURING_COMMANDS_H

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qturing/analytic.h"
#include "qturing/config.h"
#include "qturing/records.h"

namespace qturing {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Residual bound for every family checked by `verify`.
inline constexpr double kVerifyTolerance = 1e-10;

/// Brute-force records for every step of every requested cycle, plus closed-form records
/// at each cycle end when the machine is uniform. Sorted by (m, j, index, source).
std::vector<CorrelationRecord> collect_records(const RunConfig &config);

/// Resolves `config.output` (relative paths against $QTURING_OUTPUT_DIR) and writes the
/// records in the configured format; empty output means `out`.
void write_records(const RunConfig &config, const std::vector<CorrelationRecord> &records, std::ostream &out);

int cmd_run(const RunConfig &config, std::ostream &out, std::ostream &err);

using PredictionFn = std::function<PredictionSet(size_t cycle, const MachineSpec &spec)>;

struct FamilyResult {
    std::string name;
    size_t checks = 0;
    double max_residual = 0;
    /// Where the max was attained, e.g. "machine 0 (m=2, j=8, index 30000)".
    std::string worst_at;
    bool skipped = false;
};

struct VerifyReport {
    std::optional<uint64_t> period;
    std::vector<FamilyResult> families;
    bool passed() const;
};

/// Checks the configured machine (and `random_machines` extra random rational ones) in
/// four families: closed_form, web, parallelism, postponement. Closed forms are compared
/// over cycles 1..period (or 1..cycles when no period is known).
VerifyReport run_verification(const RunConfig &config, const PredictionFn &predictor = predict);

void print_report(const VerifyReport &report, std::ostream &out);

int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err, const PredictionFn &predictor = predict);

/// Head K_3 after cycle 1 of the Zeno machine for M in [lo, hi], as analytic and
/// brute-force records at (1, 2M).
std::vector<CorrelationRecord> zeno_records(size_t lo, size_t hi);

int cmd_zeno(size_t lo, size_t hi, const RunConfig &output_config, std::ostream &out, std::ostream &err);

}  // namespace qturing

#endif
