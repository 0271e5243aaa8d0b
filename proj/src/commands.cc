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

#include "qturing/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>

#include "qturing/error.h"
#include "qturing/gates.h"
#include "qturing/histories.h"
#include "qturing/machine.h"

namespace qturing {

namespace {

std::string location(const std::string &machine, size_t m, size_t j, const std::string &index) {
    std::string out = machine + " (m=" + std::to_string(m) + ", j=" + std::to_string(j);
    if (!index.empty()) {
        out += ", index " + index;
    }
    return out + ")";
}

void note(FamilyResult &family, double residual, const std::string &where) {
    family.checks++;
    double r = std::isnan(residual) ? INFINITY : residual;
    if (family.checks == 1 || r > family.max_residual) {
        family.max_residual = r;
        family.worst_at = where;
    }
}

struct Families {
    FamilyResult closed_form{"closed_form", 0, 0, "", false};
    FamilyResult web{"web", 0, 0, "", false};
    FamilyResult parallelism{"parallelism", 0, 0, "", false};
    FamilyResult postponement{"postponement", 0, 0, "", false};
};

void check_machine(
    const MachineSpec &spec, const std::string &label, size_t cycles, const PredictionFn &predictor, Families &f) {
    size_t num_cells = spec.num_memory_cells();
    size_t end_step = spec.steps_per_cycle();
    auto web_idx = web_indices(num_cells);

    run(spec, cycles, [&](StepLabel at, const StateVector &psi) {
        std::vector<CorrelationRecord> web_records;
        for (const auto &q : web_idx) {
            web_records.push_back({at.cycle, at.step, q, expect_k(psi, q), RecordSource::BruteForce});
        }
        note(f.web, web_residual(web_records), location(label, at.cycle, at.step, ""));

        if (at.step == end_step && spec.is_uniform()) {
            for (const auto &r : predictor(at.cycle, spec).entries) {
                double brute = expect_k(psi, r.index);
                note(f.closed_form, std::abs(brute - r.value), location(label, at.cycle, at.step, r.index.str()));
            }
        }
    });

    note(f.parallelism, parallelism_residual(spec), label);

    for (size_t mu = 1; mu <= num_cells; mu++) {
        for (int outcome = 0; outcome < 2; outcome++) {
            try {
                double r = postponement_residual(spec, SubsystemId::memory(mu), outcome);
                note(f.postponement, r, label + " (cell " + std::to_string(mu) + ", outcome " + std::to_string(outcome) + ")");
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::ImpossibleOutcome) {
                    throw;
                }
            }
        }
    }
}

std::ostream &open_output(const RunConfig &config, std::ofstream &file, std::ostream &fallback) {
    if (config.output.empty() || config.output == "-") {
        return fallback;
    }
    std::filesystem::path path(config.output);
    if (path.is_relative()) {
        if (const char *dir = std::getenv("QTURING_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            path = std::filesystem::path(dir) / path;
        }
    }
    file.open(path);
    if (!file) {
        throw Error(ErrorKind::Unsupported, "cannot open output file " + path.string());
    }
    return file;
}

}  // namespace

std::vector<CorrelationRecord> collect_records(const RunConfig &config) {
    const MachineSpec &spec = config.machine;
    spec.validate();
    std::vector<ClusterIndex> indices =
        config.indices.empty() ? standard_indices(spec.num_memory_cells()) : config.indices;

    std::vector<CorrelationRecord> out;
    run(spec, config.cycles, [&](StepLabel at, const StateVector &psi) {
        for (const auto &q : indices) {
            out.push_back({at.cycle, at.step, q, expect_k(psi, q), RecordSource::BruteForce});
        }
        if (at.step == spec.steps_per_cycle() && spec.is_uniform()) {
            for (auto &r : predict(at.cycle, spec).entries) {
                if (std::find(indices.begin(), indices.end(), r.index) != indices.end()) {
                    out.push_back(std::move(r));
                }
            }
        }
    });
    sort_records(out);
    return out;
}

void write_records(const RunConfig &config, const std::vector<CorrelationRecord> &records, std::ostream &out) {
    std::ofstream file;
    std::ostream &dest = open_output(config, file, out);
    if (config.format == OutputFormat::Json) {
        write_json(dest, records);
    } else {
        write_csv(dest, records);
    }
}

int cmd_run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        write_records(config, collect_records(config), out);
        return kExitOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

bool VerifyReport::passed() const {
    for (const auto &f : families) {
        if (!f.skipped && !(f.max_residual <= kVerifyTolerance)) {
            return false;
        }
    }
    return true;
}

VerifyReport run_verification(const RunConfig &config, const PredictionFn &predictor) {
    config.machine.validate();
    VerifyReport report;
    report.period = period(config.machine);

    Families f;
    std::vector<std::pair<std::string, MachineSpec>> machines{{"configured machine", config.machine}};
    std::mt19937_64 rng(config.seed);
    for (size_t k = 0; k < config.random_machines; k++) {
        machines.emplace_back("random machine " + std::to_string(k), random_rational_machine(config.machine.num_memory_cells(), 12, rng));
    }
    for (const auto &[label, spec] : machines) {
        auto p = period(spec);
        size_t cycles = p ? size_t(*p) : config.cycles;
        check_machine(spec, label, cycles, predictor, f);
    }
    f.closed_form.skipped = f.closed_form.checks == 0;
    f.postponement.skipped = f.postponement.checks == 0;
    report.families = {f.closed_form, f.web, f.parallelism, f.postponement};
    return report;
}

void print_report(const VerifyReport &report, std::ostream &out) {
    out << "period: " << (report.period ? std::to_string(*report.period) : std::string("none")) << '\n';
    for (const auto &f : report.families) {
        out << std::left << std::setw(14) << f.name;
        if (f.skipped) {
            out << " skipped\n";
            continue;
        }
        bool ok = f.max_residual <= kVerifyTolerance;
        out << (ok ? " ok  " : " FAIL") << "  checks=" << f.checks << "  max_residual=" << std::setprecision(3)
            << std::scientific << f.max_residual << std::defaultfloat;
        if (!ok) {
            out << "  at " << f.worst_at;
        }
        out << '\n';
    }
}

int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err, const PredictionFn &predictor) {
    VerifyReport report;
    try {
        report = run_verification(config, predictor);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    print_report(report, out);
    if (!report.passed()) {
        for (const auto &f : report.families) {
            if (!f.skipped && !(f.max_residual <= kVerifyTolerance)) {
                err << "verification failed: " << f.name << " residual " << f.max_residual << " at " << f.worst_at
                    << '\n';
            }
        }
        return kExitVerificationFailed;
    }
    return kExitOk;
}

std::vector<CorrelationRecord> zeno_records(size_t lo, size_t hi) {
    if (lo < 2 || hi > kMaxMemoryCells || lo > hi) {
        throw Error(ErrorKind::OutOfRange, "Zeno range must satisfy 2 <= lo <= hi <= 20");
    }
    std::vector<CorrelationRecord> out;
    for (size_t m = lo; m <= hi; m++) {
        auto spec = MachineSpec::zeno(m);
        auto head = ClusterIndex::single(m + 1, SubsystemId::head(), Generator::L3);
        StateVector psi = run(spec, 1);
        out.push_back({1, 2 * m, head, zeno(m), RecordSource::Analytic});
        out.push_back({1, 2 * m, head, expect_k(psi, head), RecordSource::BruteForce});
    }
    return out;
}

int cmd_zeno(size_t lo, size_t hi, const RunConfig &output_config, std::ostream &out, std::ostream &err) {
    try {
        write_records(output_config, zeno_records(lo, hi), out);
        return kExitOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace qturing
