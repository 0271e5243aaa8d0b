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

#include "qturing/records.h"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "qturing/error.h"

namespace qturing {

namespace {

std::string format_value(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

size_t parse_count(std::string_view text, size_t line) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": bad integer '" + std::string(text) + "'");
    }
    return v;
}

double parse_double(const std::string &text, size_t line) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": bad number '" + text + "'");
}

}  // namespace

const char *source_name(RecordSource source) {
    return source == RecordSource::Analytic ? "analytic" : "bruteforce";
}

RecordSource parse_source(std::string_view text) {
    if (text == "analytic") {
        return RecordSource::Analytic;
    }
    if (text == "bruteforce") {
        return RecordSource::BruteForce;
    }
    throw Error(ErrorKind::Parse, "unknown record source '" + std::string(text) + "'");
}

bool record_less(const CorrelationRecord &a, const CorrelationRecord &b) {
    return std::tie(a.cycle, a.step, a.index, a.source) < std::tie(b.cycle, b.step, b.index, b.source);
}

void sort_records(std::vector<CorrelationRecord> &records) {
    std::stable_sort(records.begin(), records.end(), record_less);
}

void write_csv(std::ostream &out, const std::vector<CorrelationRecord> &records) {
    out << "m,j,index,value,source\n";
    for (const auto &r : records) {
        out << r.cycle << ',' << r.step << ',' << r.index.str() << ',' << format_value(r.value) << ','
            << source_name(r.source) << '\n';
    }
}

std::vector<CorrelationRecord> read_csv(std::istream &in) {
    std::vector<CorrelationRecord> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line_no == 1) {
            if (line != "m,j,index,value,source") {
                throw Error(ErrorKind::Parse, "line 1: unexpected CSV header '" + line + "'");
            }
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 5) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 5 fields");
        }
        CorrelationRecord r;
        r.cycle = parse_count(fields[0], line_no);
        r.step = parse_count(fields[1], line_no);
        r.index = ClusterIndex::parse(fields[2]);
        r.value = parse_double(fields[3], line_no);
        r.source = parse_source(fields[4]);
        out.push_back(std::move(r));
    }
    return out;
}

void write_json(std::ostream &out, const std::vector<CorrelationRecord> &records) {
    auto doc = nlohmann::json::array();
    for (const auto &r : records) {
        doc.push_back({
            {"m", r.cycle},
            {"j", r.step},
            {"index", r.index.str()},
            {"value", r.value},
            {"source", source_name(r.source)},
        });
    }
    // nlohmann serializes doubles with round-trip precision.
    out << doc.dump(1) << '\n';
}

std::vector<CorrelationRecord> read_json(std::istream &in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw Error(ErrorKind::Parse, "record document must be a JSON array");
    }
    std::vector<CorrelationRecord> out;
    for (const auto &item : doc) {
        try {
            CorrelationRecord r;
            r.cycle = item.at("m").get<size_t>();
            r.step = item.at("j").get<size_t>();
            r.index = ClusterIndex::parse(item.at("index").get<std::string>());
            r.value = item.at("value").get<double>();
            r.source = parse_source(item.at("source").get<std::string>());
            out.push_back(std::move(r));
        } catch (const nlohmann::json::exception &e) {
            throw Error(ErrorKind::Parse, std::string("malformed record: ") + e.what());
        }
    }
    return out;
}

}  // namespace qturing
