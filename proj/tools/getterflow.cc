//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/getterflow.cc
//! \brief Command-line driver
//---------------------------------------------------------------------------//
#include <iostream>

#include "CLI11.hpp"

#include "getterflow/cli/Commands.hh"

int main(int argc, char* argv[])
{
    using namespace getterflow;

    CLI::App app{"Monte Carlo pumping enhancement of structured getter surfaces"};
    app.require_subcommand(1);

    CommandOptions opts;
    std::uint64_t seed{};
    std::uint64_t particles{};
    unsigned workers{0};
    double threshold{};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config, "JSON configuration file")->required();
        sub->add_option("--out", opts.out, "Output directory");
        sub->add_option("--workers", workers,
                        "Worker threads (default: GETTERFLOW_WORKERS or all cores)");
        sub->add_option("--format", opts.format, "Table format")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_mc = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "Random seed (overrides config)");
        sub->add_option("--particles", particles, "Particles per run (overrides config)");
    };

    auto* simulate = app.add_subcommand("simulate", "Trace one geometry");
    add_common(simulate);
    add_mc(simulate);
    auto* sweep = app.add_subcommand("sweep", "Scan a geometry parameter");
    add_common(sweep);
    add_mc(sweep);
    sweep->add_flag("--plot", opts.plot, "Also write sweep.svg");
    auto* analyze = app.add_subcommand("analyze", "Reduce pressure logs to pumping coefficients");
    add_common(analyze);
    analyze->add_option("--threshold", threshold, "Decline threshold [mbar] (default 1e-5)");
    auto* report = app.add_subcommand("report", "Tabulate a histogram or a set of rate fits");
    add_common(report);

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_config_error;
    }

    auto* sub = app.get_subcommands().front();
    auto given = [sub](char const* name) {
        auto* opt = sub->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (given("--seed"))
        opts.seed = seed;
    if (given("--particles"))
        opts.particles = particles;
    if (given("--threshold"))
        opts.threshold = threshold;
    opts.workers = given("--workers") && workers > 0 ? workers : default_workers();

    return run_command(sub->get_name(), opts, std::cout, std::cerr);
}
