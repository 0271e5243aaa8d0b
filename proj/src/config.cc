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

#include "qturing/config.h"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>

#include "qturing/error.h"

namespace qturing {

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r";
    size_t b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        size_t c = s.find(',');
        out.push_back(trim(s.substr(0, c)));
        if (c == std::string_view::npos) {
            return out;
        }
        s.remove_prefix(c + 1);
    }
}

template <typename T>
std::optional<T> parse_int(std::string_view s) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

[[noreturn]] void fail(size_t line, const std::string &message) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message);
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw Error(ErrorKind::Parse, "unknown output format '" + std::string(text) + "'");
}

PhaseAngle parse_angle(std::string_view raw) {
    std::string_view text = trim(raw);
    if (text.empty()) {
        throw Error(ErrorKind::Parse, "empty angle");
    }
    size_t pi_at = text.find("pi");
    if (pi_at != std::string_view::npos) {
        // [sign][n]pi[/d]  ->  n pi / d  =  2 pi n / (2 d)
        std::string_view coeff = text.substr(0, pi_at);
        std::string_view rest = text.substr(pi_at + 2);
        int64_t num = 1;
        if (coeff == "-") {
            num = -1;
        } else if (!coeff.empty() && coeff != "+") {
            if (coeff.front() == '+') {
                coeff.remove_prefix(1);
            }
            auto n = parse_int<int64_t>(coeff);
            if (!n) {
                throw Error(ErrorKind::Parse, "bad multiplier in angle '" + std::string(text) + "'");
            }
            num = *n;
        }
        int64_t den = 1;
        if (!rest.empty()) {
            if (rest.front() != '/') {
                throw Error(ErrorKind::Parse, "malformed angle '" + std::string(text) + "'");
            }
            auto d = parse_int<int64_t>(rest.substr(1));
            if (!d || *d <= 0) {
                throw Error(ErrorKind::Parse, "bad denominator in angle '" + std::string(text) + "'");
            }
            den = *d;
        }
        return PhaseAngle::turns(num, 2 * den);
    }
    if (auto n = parse_int<int64_t>(text); n && *n == 0) {
        return PhaseAngle::turns(0, 1);
    }
    std::string owned(text);
    try {
        size_t used = 0;
        double v = std::stod(owned, &used);
        if (used == owned.size() && std::isfinite(v)) {
            return PhaseAngle::from_radians(v);
        }
    } catch (const std::exception &) {
    }
    throw Error(ErrorKind::Parse, "malformed angle '" + owned + "'");
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::optional<size_t> num_cells;
    std::optional<std::vector<PhaseAngle>> angles;
    std::map<size_t, std::vector<PhaseAngle>> overrides;
    size_t angles_line = 0;

    size_t line_no = 0;
    while (!text.empty()) {
        line_no++;
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(line_no, "expected 'key = value'");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) {
            fail(line_no, "missing value for '" + key + "'");
        }

        auto angle_list = [&](std::string_view v) {
            std::vector<PhaseAngle> out;
            for (auto item : split_commas(v)) {
                try {
                    out.push_back(parse_angle(item));
                } catch (const Error &e) {
                    fail(line_no, e.what());
                }
            }
            return out;
        };
        auto count = [&](std::string_view v) {
            auto n = parse_int<uint64_t>(v);
            if (!n) {
                fail(line_no, "'" + key + "' needs a non-negative integer");
            }
            return *n;
        };

        if (key == "preset") {
            if (value != "zeno" && value != "coin" && value != "cat") {
                fail(line_no, "unknown preset '" + std::string(value) + "'");
            }
            cfg.preset = value;
        } else if (key == "M") {
            num_cells = count(value);
            if (*num_cells < 1 || *num_cells > kMaxMemoryCells) {
                fail(line_no, "M must be in [1, " + std::to_string(kMaxMemoryCells) + "]");
            }
        } else if (key == "angles") {
            angles = angle_list(value);
            angles_line = line_no;
        } else if (key.rfind("cycle_angles.", 0) == 0) {
            auto m = parse_int<size_t>(std::string_view(key).substr(13));
            if (!m || *m < 1) {
                fail(line_no, "cycle override key needs a cycle number >= 1");
            }
            overrides[*m] = angle_list(value);
        } else if (key == "coupling" || key == "g") {
            std::string owned(value);
            try {
                cfg.machine.coupling = std::stod(owned);
            } catch (const std::exception &) {
                fail(line_no, "bad coupling '" + owned + "'");
            }
            if (!(cfg.machine.coupling > 0)) {
                fail(line_no, "coupling must be positive");
            }
        } else if (key == "cycles") {
            cfg.cycles = count(value);
            if (cfg.cycles < 1) {
                fail(line_no, "cycles must be >= 1");
            }
        } else if (key == "indices") {
            cfg.indices.clear();
            if (value != "standard") {
                for (auto item : split_commas(value)) {
                    try {
                        cfg.indices.push_back(ClusterIndex::parse(item));
                    } catch (const Error &e) {
                        fail(line_no, e.what());
                    }
                }
            }
        } else if (key == "output") {
            cfg.output = value;
        } else if (key == "format") {
            try {
                cfg.format = parse_format(value);
            } catch (const Error &e) {
                fail(line_no, e.what());
            }
        } else if (key == "seed") {
            cfg.seed = count(value);
        } else if (key == "random_machines") {
            cfg.random_machines = count(value);
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }

    if (angles) {
        if (num_cells && *num_cells != angles->size()) {
            fail(angles_line, "M = " + std::to_string(*num_cells) + " but " + std::to_string(angles->size()) + " angles given");
        }
        cfg.machine.angles = *angles;
    } else if (!cfg.preset.empty()) {
        size_t m = num_cells.value_or(4);
        if (cfg.preset == "zeno") {
            if (m < 2) {
                fail(line_no, "the zeno preset needs M >= 2");
            }
            cfg.machine.angles = MachineSpec::zeno(m).angles;
        } else if (cfg.preset == "coin") {
            cfg.machine.angles = MachineSpec::coin(m).angles;
        } else {
            cfg.machine.angles = MachineSpec::cat(m).angles;
        }
    } else {
        fail(line_no, "missing field: either 'preset' or 'angles' is required");
    }

    size_t expected = 1;
    for (auto &[m, list] : overrides) {
        if (m != expected++) {
            fail(line_no, "cycle_angles overrides must be contiguous from cycle 1");
        }
        if (list.size() != cfg.machine.angles.size()) {
            fail(line_no, "cycle_angles." + std::to_string(m) + " has the wrong number of angles");
        }
        cfg.machine.cycle_angles.push_back(std::move(list));
    }
    for (const auto &q : cfg.indices) {
        if (q.size() != cfg.machine.num_memory_cells() + 1) {
            fail(line_no, "index " + q.str() + " does not match M = " + std::to_string(cfg.machine.num_memory_cells()));
        }
    }
    return cfg;
}

}  // namespace qturing
