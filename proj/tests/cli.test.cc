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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "qturing/commands.h"
#include "qturing/config.h"
#include "qturing/records.h"
#include "test_util.h"

using namespace qturing;
using qtest::error_kind_of;

namespace {

constexpr double kPi = std::numbers::pi;

const CorrelationRecord *find_record(
    const std::vector<CorrelationRecord> &records, size_t m, size_t j, const std::string &index, RecordSource src) {
    for (const auto &r : records) {
        if (r.cycle == m && r.step == j && r.index.str() == index && r.source == src) {
            return &r;
        }
    }
    return nullptr;
}

std::string parse_error_message(std::string_view text) {
    try {
        parse_config(text);
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
        return e.what();
    }
    ADD_FAILURE() << "expected a parse error for: " << text;
    return {};
}

}  // namespace

TEST(parse_angle, forms) {
    auto third = parse_angle("pi/3");
    EXPECT_TRUE(third.is_exact());
    EXPECT_EQ(third.turn_numerator(), 1);
    EXPECT_EQ(third.turn_denominator(), 6);
    EXPECT_EQ(parse_angle("2pi/8"), PhaseAngle::turns(1, 8));
    EXPECT_EQ(parse_angle("pi/2"), PhaseAngle::turns(1, 4));
    EXPECT_EQ(parse_angle("pi"), PhaseAngle::turns(1, 2));
    EXPECT_EQ(parse_angle("-pi/2"), PhaseAngle::turns(-1, 4));
    EXPECT_EQ(parse_angle(" 0 "), PhaseAngle::turns(0, 1));
    auto f = parse_angle("0.25");
    EXPECT_FALSE(f.is_exact());
    EXPECT_EQ(f.radians(), 0.25);
    for (const char *bad : {"", "pi/0", "pi/x", "xpi", "1.2.3", "pi3", "nan"}) {
        EXPECT_EQ(error_kind_of([&] { parse_angle(bad); }), ErrorKind::Parse) << bad;
    }
}

TEST(parse_config, presets) {
    auto cat = parse_config("preset = cat\n");
    ASSERT_EQ(cat.machine.num_memory_cells(), 4u);
    EXPECT_EQ(cat.machine.angles[0], PhaseAngle::turns(1, 4));
    for (size_t k = 1; k < 4; k++) {
        EXPECT_EQ(cat.machine.angles[k].radians(), 0);
    }

    auto zeno = parse_config("preset = zeno\nM = 6\n");
    ASSERT_EQ(zeno.machine.num_memory_cells(), 6u);
    for (const auto &a : zeno.machine.angles) {
        EXPECT_EQ(a, PhaseAngle::turns(1, 12));
        EXPECT_NEAR(a.radians(), kPi / 6, 1e-15);
    }

    auto coin = parse_config("preset = coin");
    EXPECT_EQ(coin.machine.angles, MachineSpec::coin().angles);
}

TEST(parse_config, full_document) {
    auto cfg = parse_config(
        "# a custom machine\n"
        "angles = pi/2, 2pi/8, 0, 0.5   # mixed forms\n"
        "g = 2\n"
        "cycles = 3\n"
        "indices = 30000, 03300\n"
        "output = out.json\n"
        "format = json\n"
        "seed = 17\n"
        "random_machines = 4\n");
    ASSERT_EQ(cfg.machine.num_memory_cells(), 4u);
    EXPECT_EQ(cfg.machine.angles[1], PhaseAngle::turns(1, 8));
    EXPECT_FALSE(cfg.machine.angles[3].is_exact());
    EXPECT_EQ(cfg.machine.coupling, 2);
    EXPECT_EQ(cfg.cycles, 3u);
    ASSERT_EQ(cfg.indices.size(), 2u);
    EXPECT_EQ(cfg.indices[1].str(), "03300");
    EXPECT_EQ(cfg.output, "out.json");
    EXPECT_EQ(cfg.format, OutputFormat::Json);
    EXPECT_EQ(cfg.seed, 17u);
    EXPECT_EQ(cfg.random_machines, 4u);

    auto varying = parse_config("angles = pi/2, 0\ncycle_angles.1 = 0, pi\ncycle_angles.2 = pi, 0\n");
    EXPECT_FALSE(varying.machine.is_uniform());
    EXPECT_EQ(varying.machine.cycle_angles.size(), 2u);
}

TEST(parse_config, errors_carry_line_numbers) {
    EXPECT_NE(parse_error_message("preset = cat\nangles = pi/2, foo\n").find("line 2"), std::string::npos);
    EXPECT_NE(parse_error_message("preset = cat\n\nbogus = 1\n").find("line 3"), std::string::npos);
    EXPECT_NE(parse_error_message("cycles = 2\n").find("missing"), std::string::npos);
    EXPECT_NE(parse_error_message("preset = dice\n").find("line 1"), std::string::npos);
    EXPECT_NE(parse_error_message("preset = cat\ncycles = 0\n").find("line 2"), std::string::npos);
    EXPECT_NE(parse_error_message("M = 3\nangles = 0, 0\n").find("line 2"), std::string::npos);
    parse_error_message("preset = cat\nindices = 333\n");
    parse_error_message("preset = cat\nformat = xml\n");
    parse_error_message("preset = cat\ng = -1\n");
    parse_error_message("preset = cat\nthis line has no equals sign\n");
}

TEST(records, csv_round_trip_is_exact) {
    std::mt19937_64 rng(81);
    std::uniform_real_distribution<double> v(-1, 1);
    std::vector<CorrelationRecord> records;
    for (size_t k = 0; k < 200; k++) {
        records.push_back(
            {k / 10 + 1, k % 10, ClusterIndex::parse(k % 2 ? "03300" : "30000"), v(rng),
             k % 3 ? RecordSource::BruteForce : RecordSource::Analytic});
    }
    records.push_back({1, 1, ClusterIndex::parse("10000"), 1e-300, RecordSource::Analytic});
    records.push_back({1, 1, ClusterIndex::parse("10000"), -0.1, RecordSource::BruteForce});

    std::stringstream csv;
    write_csv(csv, records);
    EXPECT_EQ(csv.str().substr(0, 23), "m,j,index,value,source\n");
    EXPECT_EQ(read_csv(csv), records);

    std::stringstream json;
    write_json(json, records);
    EXPECT_EQ(read_json(json), records);
}

TEST(records, malformed_input) {
    std::stringstream bad_header("a,b,c\n");
    EXPECT_EQ(error_kind_of([&] { read_csv(bad_header); }), ErrorKind::Parse);
    std::stringstream bad_row("m,j,index,value,source\n1,8,03300,zero,bruteforce\n");
    EXPECT_EQ(error_kind_of([&] { read_csv(bad_row); }), ErrorKind::Parse);
    std::stringstream short_row("m,j,index,value,source\n1,8,03300\n");
    EXPECT_EQ(error_kind_of([&] { read_csv(short_row); }), ErrorKind::Parse);
    std::stringstream bad_source("m,j,index,value,source\n1,8,03300,1,guess\n");
    EXPECT_EQ(error_kind_of([&] { read_csv(bad_source); }), ErrorKind::Parse);
    std::stringstream bad_json("{\"m\": 1}");
    EXPECT_EQ(error_kind_of([&] { read_json(bad_json); }), ErrorKind::Parse);
    std::stringstream truncated("[{\"m\": 1, \"j\": 2}]");
    EXPECT_EQ(error_kind_of([&] { read_json(truncated); }), ErrorKind::Parse);
}

TEST(records, sorted_by_cycle_step_index_source) {
    std::vector<CorrelationRecord> records{
        {2, 1, ClusterIndex::parse("30"), 0, RecordSource::BruteForce},
        {1, 2, ClusterIndex::parse("30"), 0, RecordSource::Analytic},
        {1, 2, ClusterIndex::parse("30"), 0, RecordSource::BruteForce},
        {1, 2, ClusterIndex::parse("03"), 0, RecordSource::BruteForce},
    };
    sort_records(records);
    EXPECT_EQ(records[0].index.str(), "03");
    EXPECT_EQ(records[1].source, RecordSource::BruteForce);
    EXPECT_EQ(records[2].source, RecordSource::Analytic);
    EXPECT_EQ(records[3].cycle, 2u);
}

TEST(cmd_run, cat_preset_records) {
    auto cfg = parse_config("preset = cat\n");
    auto records = collect_records(cfg);
    auto *pair = find_record(records, 1, 8, "03300", RecordSource::BruteForce);
    ASSERT_NE(pair, nullptr);
    EXPECT_NEAR(pair->value, 1.0, 1e-12);
    // One brute-force record per index per step, plus the end-of-cycle predictions.
    EXPECT_EQ(records.size(), 17u * 8 + 17u);
    EXPECT_TRUE(std::is_sorted(records.begin(), records.end(), record_less));

    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_run(cfg, out, err), kExitOk);
    EXPECT_NE(out.str().find("\n1,8,03300,"), std::string::npos);
    EXPECT_TRUE(err.str().empty());
}

TEST(cmd_run, coin_preset_end_of_cycle_is_silent) {
    auto records = collect_records(parse_config("preset = coin\n"));
    size_t checked = 0;
    for (const auto &r : records) {
        bool head_memory_pair = r.index[0] != Generator::I && r.index.order() == 2;
        if (r.cycle == 1 && r.step == 8 && !head_memory_pair) {
            EXPECT_NEAR(r.value, 0, 1e-12) << r.index.str();
            checked++;
        }
    }
    EXPECT_EQ(checked, 2u * 13);
}

TEST(cmd_run, zeno_preset_has_analytic_head_record) {
    auto records = collect_records(parse_config("preset = zeno\n"));
    auto *head = find_record(records, 1, 8, "30000", RecordSource::Analytic);
    ASSERT_NE(head, nullptr);
    EXPECT_NEAR(head->value, -0.25, 1e-12);
    auto *brute = find_record(records, 1, 8, "30000", RecordSource::BruteForce);
    ASSERT_NE(brute, nullptr);
    EXPECT_NEAR(brute->value, -0.25, 1e-12);
}

TEST(cmd_run, custom_indices_and_json_file_output) {
    auto dir = std::filesystem::temp_directory_path() / "qturing_cli_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "records.json";
    auto cfg = parse_config("preset = cat\ncycles = 2\nindices = 03300, 33000\nformat = json\n");
    cfg.output = path.string();
    std::ostringstream out;
    std::ostringstream err;
    ASSERT_EQ(cmd_run(cfg, out, err), kExitOk);
    EXPECT_TRUE(out.str().empty());
    std::ifstream in(path);
    auto records = read_json(in);
    EXPECT_EQ(records.size(), 2u * 16 + 2u * 2);
    std::filesystem::remove_all(dir);
}

TEST(cmd_run, relative_output_uses_env_directory) {
    auto dir = std::filesystem::temp_directory_path() / "qturing_env_test";
    std::filesystem::create_directories(dir);
    ::setenv("QTURING_OUTPUT_DIR", dir.c_str(), 1);
    auto cfg = parse_config("preset = coin\noutput = coin.csv\n");
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_run(cfg, out, err), kExitOk);
    ::unsetenv("QTURING_OUTPUT_DIR");
    std::ifstream in(dir / "coin.csv");
    ASSERT_TRUE(in.good());
    EXPECT_FALSE(read_csv(in).empty());
    std::filesystem::remove_all(dir);
}

TEST(cmd_run, engine_errors_exit_with_usage_code) {
    RunConfig cfg;
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_run(cfg, out, err), kExitUsage);
    EXPECT_NE(err.str().find("error"), std::string::npos);
    EXPECT_TRUE(out.str().empty());
}

TEST(cmd_verify, zeno_preset_passes) {
    auto cfg = parse_config("preset = zeno\n");
    auto report = run_verification(cfg);
    EXPECT_TRUE(report.passed());
    for (const auto &f : report.families) {
        EXPECT_FALSE(f.skipped) << f.name;
        EXPECT_GT(f.checks, 0u) << f.name;
        EXPECT_LE(f.max_residual, kVerifyTolerance) << f.name;
    }
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_verify(cfg, out, err), kExitOk);
}

TEST(cmd_verify, cat_preset_reports_period_eight) {
    auto cfg = parse_config("preset = cat\n");
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_verify(cfg, out, err), kExitOk);
    EXPECT_NE(out.str().find("period: 8"), std::string::npos);
}

TEST(cmd_verify, random_machines_pass) {
    auto cfg = parse_config("preset = coin\nseed = 5\nrandom_machines = 5\n");
    EXPECT_TRUE(run_verification(cfg).passed());
}

TEST(cmd_verify, corrupted_closed_form_is_reported) {
    auto cfg = parse_config("preset = zeno\n");
    PredictionFn corrupted = [](size_t cycle, const MachineSpec &spec) {
        auto p = predict(cycle, spec);
        for (auto &r : p.entries) {
            if (r.index.str() == "30000") {
                r.value *= 1.001;
            }
        }
        return p;
    };
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_verify(cfg, out, err, corrupted), kExitVerificationFailed);
    EXPECT_NE(err.str().find("closed_form"), std::string::npos);
    EXPECT_NE(err.str().find("30000"), std::string::npos);
    EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

TEST(cmd_verify, varying_machine_skips_closed_forms) {
    auto cfg = parse_config("angles = pi/2, pi/3\ncycle_angles.1 = pi/2, pi/3\ncycle_angles.2 = pi/3, pi/2\ncycles = 4\n");
    auto report = run_verification(cfg);
    EXPECT_TRUE(report.passed());
    EXPECT_TRUE(report.families[0].skipped);
}

TEST(cmd_zeno, records_for_range) {
    auto records = zeno_records(2, 10);
    ASSERT_EQ(records.size(), 18u);
    for (size_t k = 0; k < records.size(); k += 2) {
        EXPECT_NEAR(records[k].value, records[k + 1].value, 1e-12);
        EXPECT_EQ(records[k].step, 2 * (k / 2 + 2));
    }
    EXPECT_NEAR(records[0].value, 0, 1e-15);
    EXPECT_NEAR(records[16].value, -std::pow(std::cos(kPi / 10), 10), 1e-15);
    EXPECT_LT(records[16].value, -0.25);
    EXPECT_EQ(error_kind_of([] { zeno_records(1, 4); }), ErrorKind::OutOfRange);
    EXPECT_EQ(error_kind_of([] { zeno_records(2, 21); }), ErrorKind::OutOfRange);

    RunConfig out_cfg;
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_zeno(2, 4, out_cfg, out, err), kExitOk);
    EXPECT_NE(out.str().find("\n1,8,30000,-0.2"), std::string::npos);
    EXPECT_EQ(cmd_zeno(5, 3, out_cfg, out, err), kExitUsage);
}
