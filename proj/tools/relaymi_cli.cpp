// SPDX-License-Identifier: Apache-2.0
//
// relay-mi: asymptotic mutual-information statistics of two-hop AF MIMO relay channels
// Copyright (C) 2026 The relay-mi Authors
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
#include <fstream>
#include <iostream>
#include <string>

#include <relaymi/relaymi.hpp>

namespace
{

    // Exit codes: 0 success, 1 usage/config error, 2 numeric/convergence error.
    int emit(const relaymi::RunSpec &spec)
    {
        const relaymi::RunOutput out = relaymi::run(spec);
        if (spec.out_path.empty())
        {
            std::cout << out.csv;
        }
        else
        {
            std::ofstream f(spec.out_path, std::ios::binary);
            if (!f)
            {
                std::cerr << "error: cannot open output file: " << spec.out_path << "\n";
                return 1;
            }
            f << out.csv;
        }
        return out.ok ? 0 : 2;
    }

    void add_common(CLI::App *cmd, relaymi::RunSpec &spec, std::string &variant)
    {
        cmd->add_option("--config", spec.config_path, "scenario config file (key=value lines)")
            ->required();
        cmd->add_option("--out", spec.out_path, "write CSV to this file instead of stdout");
        cmd->add_flag("--bits", spec.bits, "report mutual information in bits instead of nats");
        cmd->add_option("--s2-variant", variant,
                        "override the config's s2 equation variant")
            ->check(CLI::IsMember({"printed", "consistent", "as_printed", "scalar_consistent"}));
    }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"relay-mi: asymptotic and Monte Carlo mutual-information statistics "
                 "of two-hop AF MIMO relay channels"};
    app.require_subcommand(1);

    relaymi::RunSpec spec;
    std::string variant;
    std::string sweep_param = "rho";
    std::vector<double> values;

    CLI::App *solve = app.add_subcommand("solve", "evaluate the asymptotic mean and variance");
    CLI::App *simulate = app.add_subcommand("simulate", "Monte Carlo cumulant estimation");
    CLI::App *compare = app.add_subcommand("compare", "asymptotic formulas vs Monte Carlo");
    CLI::App *sweep = app.add_subcommand("sweep", "asymptotic curve over rho or alpha");

    for (CLI::App *cmd : {solve, simulate, compare, sweep})
        add_common(cmd, spec, variant);
    for (CLI::App *cmd : {simulate, compare, sweep})
    {
        auto *opt = cmd->add_option("--samples", spec.samples, "number of Monte Carlo samples");
        auto *seed = cmd->add_option("--seed", spec.seed, "Monte Carlo seed");
        (void)opt;
        (void)seed;
    }
    simulate->add_option("--dump-samples", spec.dump_path,
                         "write one mutual-information value per line to this file");
    sweep->add_option("--sweep-param", sweep_param, "parameter to sweep")
        ->check(CLI::IsMember({"rho", "alpha"}));
    sweep->add_option("--values", values, "comma-separated sweep values")
        ->required()
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed())
        spec.command = relaymi::Command::solve;
    else if (simulate->parsed())
        spec.command = relaymi::Command::simulate;
    else if (compare->parsed())
        spec.command = relaymi::Command::compare;
    else
        spec.command = relaymi::Command::sweep;

    if (!variant.empty())
        spec.variant_override = (variant == "printed" || variant == "as_printed")
                                    ? relaymi::S2Variant::as_printed
                                    : relaymi::S2Variant::scalar_consistent;
    spec.sweep_param = (sweep_param == "alpha") ? relaymi::SweepParam::alpha
                                                : relaymi::SweepParam::rho;
    spec.sweep_values = values;
    for (CLI::App *cmd : {simulate, compare, sweep})
        if (cmd->parsed() && cmd->count("--samples") > 0)
            spec.samples_given = true;

    try
    {
        return emit(spec);
    }
    catch (const relaymi::ParseError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    catch (const relaymi::ValidationError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const relaymi::ConvergenceError &e)
    {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    }
    catch (const relaymi::NumericError &e)
    {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
