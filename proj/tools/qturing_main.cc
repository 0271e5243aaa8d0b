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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qturing/commands.h"
#include "qturing/error.h"

using namespace qturing;

namespace {

std::string read_document(const std::string &path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot read config file " + path);
    }
    buf << in.rdbuf();
    return buf.str();
}

/// Config from file (or a bare preset), with command-line overrides applied on top.
RunConfig load_config(
    const std::string &path, const std::string &preset, const std::string &output, const std::string &format,
    size_t cycles) {
    std::string text;
    if (!path.empty()) {
        text = read_document(path);
    }
    if (!preset.empty()) {
        text += "\npreset = " + preset + "\n";
    }
    RunConfig cfg = parse_config(text);
    if (!output.empty()) {
        cfg.output = output;
    }
    if (!format.empty()) {
        cfg.format = parse_format(format);
    }
    if (cycles > 0) {
        cfg.cycles = cycles;
    }
    return cfg;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Cyclic quantum Turing machine simulator and closed-form verifier"};
    app.require_subcommand(1);

    std::string config_path;
    std::string preset;
    std::string output;
    std::string format;
    size_t cycles = 0;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("-c,--config", config_path, "config document ('-' for stdin)");
        sub->add_option("-p,--preset", preset, "zeno | coin | cat (appended to the config)");
        sub->add_option("-o,--output", output, "output path (default: stdout)");
        sub->add_option("-f,--format", format, "csv | json");
        sub->add_option("-m,--cycles", cycles, "override the cycle count");
    };

    auto *run_cmd = app.add_subcommand("run", "evolve the machine and emit correlation records");
    add_common(run_cmd);
    auto *verify_cmd = app.add_subcommand("verify", "compare closed forms and identities against brute force");
    add_common(verify_cmd);

    size_t zeno_lo = 2;
    size_t zeno_hi = 10;
    auto *zeno_cmd = app.add_subcommand("zeno", "head K3 after one Zeno-machine cycle for a range of M");
    zeno_cmd->add_option("--min", zeno_lo, "smallest M")->check(CLI::Range(2, 20));
    zeno_cmd->add_option("--max", zeno_hi, "largest M")->check(CLI::Range(2, 20));
    zeno_cmd->add_option("-o,--output", output, "output path (default: stdout)");
    zeno_cmd->add_option("-f,--format", format, "csv | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (zeno_cmd->parsed()) {
            RunConfig out_cfg;
            out_cfg.output = output;
            if (!format.empty()) {
                out_cfg.format = parse_format(format);
            }
            return cmd_zeno(zeno_lo, zeno_hi, out_cfg, std::cout, std::cerr);
        }
        if (config_path.empty() && preset.empty()) {
            std::cerr << "error: give --config or --preset\n";
            return kExitUsage;
        }
        RunConfig cfg = load_config(config_path, preset, output, format, cycles);
        if (run_cmd->parsed()) {
            return cmd_run(cfg, std::cout, std::cerr);
        }
        return cmd_verify(cfg, std::cout, std::cerr);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
