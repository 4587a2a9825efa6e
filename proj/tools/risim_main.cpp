// SPDX-License-Identifier: Apache-2.0
//
// risim: simulation library for RIS-assisted physical-layer secrecy
// Copyright (C) 2026 The risim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// risim command line front end. Uses only the C interface of librisim.

#include "risim/risim.h"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 1,
    exit_config = 2,
    exit_io = 3,
    exit_verification = 4,
    exit_runtime = 5,
};

constexpr const char *exit_code_help = "Exit codes:\n"
                                       "  0  success\n"
                                       "  1  invalid command line\n"
                                       "  2  configuration error (parse, validation, unknown scenario)\n"
                                       "  3  I/O error (config not readable, output not writable)\n"
                                       "  4  verification check(s) failed\n"
                                       "  5  other runtime error\n"
                                       "Environment: RISIM_THREADS caps the number of worker threads (0 = auto).";

int report(int status)
{
    std::fprintf(stderr, "risim: error: %s: %s\n", risim_status_string(status), risim_last_error());
    switch (status)
    {
    case RISIM_ERR_CONFIG:
        return exit_config;
    case RISIM_ERR_IO:
        return exit_io;
    case RISIM_ERR_VERIFICATION:
        return exit_verification;
    default:
        return exit_runtime;
    }
}

struct ConfigDeleter
{
    void operator()(risim_config *c) const { risim_config_destroy(c); }
};
struct ResultDeleter
{
    void operator()(risim_result *r) const { risim_result_destroy(r); }
};

int cmd_run(const std::string &config_path, std::optional<std::uint64_t> seed, const std::string &out_path,
            const std::vector<std::string> &scenarios)
{
    risim_config *raw_cfg = nullptr;
    if (int rc = risim_config_load(config_path.c_str(), &raw_cfg); rc != RISIM_OK)
        return report(rc);
    std::unique_ptr<risim_config, ConfigDeleter> cfg(raw_cfg);

    if (seed)
        risim_config_set_seed(cfg.get(), *seed);
    if (!scenarios.empty())
    {
        std::vector<const char *> names;
        for (const auto &s : scenarios)
            names.push_back(s.c_str());
        if (int rc = risim_config_select(cfg.get(), names.data(), names.size()); rc != RISIM_OK)
            return report(rc);
    }

    size_t n_scenarios = 0, n_powers = 0;
    risim_config_scenario_count(cfg.get(), &n_scenarios);
    risim_config_power_count(cfg.get(), &n_powers);
    std::fprintf(stderr, "risim: running %zu scenario(s) x %zu power point(s)\n", n_scenarios, n_powers);

    risim_result *raw_res = nullptr;
    if (int rc = risim_run_sweep(cfg.get(), 0, &raw_res); rc != RISIM_OK)
        return report(rc);
    std::unique_ptr<risim_result, ResultDeleter> res(raw_res);

    if (int rc = risim_result_write_csv(res.get(), out_path.c_str()); rc != RISIM_OK)
        return report(rc);
    size_t rows = 0;
    risim_result_row_count(res.get(), &rows);
    std::fprintf(stderr, "risim: wrote %zu row(s) to %s\n", rows, out_path.c_str());
    return exit_ok;
}

int cmd_verify(std::uint64_t seed)
{
    size_t passed = 0, failed = 0;
    const int rc = risim_verify(
        seed, [](const char *line, void *) { std::printf("%s\n", line); }, nullptr, &passed, &failed);
    std::printf("%zu passed, %zu failed\n", passed, failed);
    return rc == RISIM_OK ? exit_ok : report(rc);
}

int cmd_presets()
{
    size_t count = 0;
    risim_preset_count(&count);
    std::printf("%-12s %9s %9s %9s %9s %9s %5s  %s\n", "preset", "d_br", "d_rd", "d_re", "d_bd", "d_be", "chi",
                "layout");
    for (size_t i = 0; i < count; ++i)
    {
        const char *name = nullptr, *description = nullptr;
        risim_geometry g{};
        if (int rc = risim_preset_get(i, &name, &description, &g); rc != RISIM_OK)
            return report(rc);
        std::printf("%-12s %9.4f %9.4f %9.4f %9.4f %9.4f %5.2f  %s\n", name, g.d_br, g.d_rd, g.d_re, g.d_bd, g.d_be,
                    g.chi, description);
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"risim: Monte Carlo secrecy simulation of RIS-assisted links"};
    app.footer(exit_code_help);
    app.require_subcommand(1);

    std::string config_path, out_path = "risim_sweep.csv";
    std::optional<std::uint64_t> run_seed;
    std::vector<std::string> scenarios;
    auto *run = app.add_subcommand("run", "Run a transmit-power sweep and write CSV");
    run->add_option("--config", config_path, "Configuration file")->required();
    run->add_option("--seed", run_seed, "Override sweep.seed");
    run->add_option("--out", out_path, "Output CSV path")->capture_default_str();
    run->add_option("--scenario", scenarios, "Only run the named scenario(s)");

    std::uint64_t verify_seed = 1;
    auto *verify = app.add_subcommand("verify", "Cross-check the optimizer against brute-force oracles");
    verify->add_option("--seed", verify_seed, "Seed for the random test instances")->capture_default_str();

    auto *presets = app.add_subcommand("presets", "Print the built-in geometry presets");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    if (run->parsed())
        return cmd_run(config_path, run_seed, out_path, scenarios);
    if (verify->parsed())
        return cmd_verify(verify_seed);
    if (presets->parsed())
        return cmd_presets();
    return exit_usage;
}
