// SPDX-License-Identifier: Apache-2.0
//
// nfdof: spatial bandwidth and degrees of freedom of near-field linear arrays
// Copyright (C) 2026 The nfdof authors
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

#include <CLI11.hpp>

#include "nfdof/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_failure = 1;
    constexpr int exit_config = 2;

    int write_table(const nfdof::SweepTable &table, const std::string &out_path)
    {
        if (out_path.empty() || out_path == "-")
        {
            table.write_csv(std::cout, nfdof::utc_timestamp());
            return exit_ok;
        }
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
        {
            std::cerr << "nfdof: cannot open " << out_path << " for writing\n";
            return exit_config;
        }
        table.write_csv(out, nfdof::utc_timestamp());
        return out ? exit_ok : exit_failure;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Spatial bandwidth, K numbers and LoS channel spectra of near-field linear arrays"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path = "-";
    std::optional<int> grid;
    std::optional<int> quad;
    std::uint64_t seed = 1;
    int cases = 100;
    bool inject_fault = false;

    using Command = std::function<nfdof::SweepTable(const nfdof::Scenario &)>;
    std::vector<std::pair<CLI::App *, Command>> table_commands;

    auto add_table_command = [&](const std::string &name, const std::string &help, Command fn) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "Scenario JSON file")->required();
        sub->add_option("--out", out_path, "Output CSV file ('-' for stdout)");
        sub->add_option("--grid", grid, "Grid points per axis (sweep, map or orientation search)");
        sub->add_option("--quad", quad, "Simpson nodes for the K-number integral (odd)");
        sub->add_option("--seed", seed, "Seed recorded in the provenance header");
        table_commands.emplace_back(sub, std::move(fn));
    };

    add_table_command("localbw", "Local bandwidth over receive orientations (psi, phi')", nfdof::cmd_localbw_sweep);
    add_table_command("maxbw-map", "Maximum local bandwidth over the yOz plane", nfdof::cmd_maxbw_map);
    add_table_command("kmax", "Maximum K number, approximate (AK) and searched (EK)", nfdof::cmd_kmax_sweep);
    add_table_command("svd", "Singular-value spectra of the LoS channel", nfdof::cmd_svd_spectrum);

    CLI::App *validate = app.add_subcommand("validate", "Run the oracle-equivalence and invariant suites");
    validate->add_option("--seed", seed, "Random seed");
    validate->add_option("--cases", cases, "Number of random configurations")->check(CLI::NonNegativeNumber);
    validate->add_option("--out", out_path, "Report file ('-' for stdout)");
    validate->add_flag("--inject-fault", inject_fault, "Perturb the closed form (harness self-test)")->group("");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try
    {
        if (validate->parsed())
        {
            const auto report = nfdof::cmd_validate(seed, cases, {inject_fault});
            if (out_path.empty() || out_path == "-")
                report.print(std::cout);
            else
            {
                std::ofstream out(out_path);
                report.print(out);
            }
            return report.passed() ? exit_ok : exit_failure;
        }

        for (auto &[sub, fn] : table_commands)
        {
            if (!sub->parsed())
                continue;
            nfdof::Scenario scenario = nfdof::load_scenario(config_path);
            nfdof::apply_overrides(scenario, grid, quad);
            nfdof::SweepTable table = fn(scenario);
            nfdof::stamp_provenance(table, scenario, seed);
            return write_table(table, out_path);
        }
    }
    catch (const nfdof::SchemaError &e)
    {
        std::cerr << "nfdof: config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const nfdof::RangeError &e)
    {
        std::cerr << "nfdof: config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "nfdof: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}
