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

#ifndef QTURING_CONFIG_H
#define QTURING_CONFIG_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qturing/cluster_ops.h"
#include "qturing/machine.h"

namespace qturing {

enum class OutputFormat {
    Csv,
    Json,
};

OutputFormat parse_format(std::string_view text);

struct RunConfig {
    MachineSpec machine;
    std::string preset;
    size_t cycles = 1;
    /// Empty means the standard closed-form index set.
    std::vector<ClusterIndex> indices;
    /// Empty means standard output.
    std::string output;
    OutputFormat format = OutputFormat::Csv;
    uint64_t seed = 0;
    /// Extra random rational machines (same M) checked by `verify`.
    size_t random_machines = 0;
};

/// Angle literal: "0", "pi", "-pi/3", "3pi/4", "2pi/8" are captured exactly as turn
/// fractions; anything else must be a plain number in radians.
PhaseAngle parse_angle(std::string_view text);

/// Line-oriented `key = value` document; `#` starts a comment. Keys:
///   preset          zeno | coin | cat
///   M               number of memory cells (presets default to 4)
///   angles          comma-separated angle literals, one per memory cell
///   cycle_angles.N  per-cycle override of `angles` for cycle N (1-based, contiguous)
///   coupling        g > 0 (alias: g)
///   cycles          >= 1
///   indices         "standard" or comma-separated digit strings such as 33000
///   output          output path (relative paths resolve against $QTURING_OUTPUT_DIR)
///   format          csv | json
///   seed            integer
///   random_machines integer
/// Throws Error(Parse) with the offending line number.
RunConfig parse_config(std::string_view text);

}  // namespace qturing

#endif
