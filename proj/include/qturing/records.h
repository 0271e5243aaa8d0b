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

#ifndef QTURING_RECORDS_H
#define QTURING_RECORDS_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qturing/cluster_ops.h"

namespace qturing {

enum class RecordSource {
    BruteForce,
    Analytic,
};

const char *source_name(RecordSource source);
RecordSource parse_source(std::string_view text);

/// One correlation value K at (cycle, step).
struct CorrelationRecord {
    size_t cycle = 0;
    size_t step = 0;
    ClusterIndex index;
    double value = 0;
    RecordSource source = RecordSource::BruteForce;

    bool operator==(const CorrelationRecord &) const = default;
};

/// Orders by (cycle, step, index, source).
bool record_less(const CorrelationRecord &a, const CorrelationRecord &b);
void sort_records(std::vector<CorrelationRecord> &records);

/// CSV with header `m,j,index,value,source`; values use 17 significant digits.
void write_csv(std::ostream &out, const std::vector<CorrelationRecord> &records);
std::vector<CorrelationRecord> read_csv(std::istream &in);

/// JSON array of objects with the same five fields.
void write_json(std::ostream &out, const std::vector<CorrelationRecord> &records);
std::vector<CorrelationRecord> read_json(std::istream &in);

}  // namespace qturing

#endif
