//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/cli/Commands.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

namespace getterflow
{
//---------------------------------------------------------------------------//
inline constexpr int config_schema_version = 1;

enum ExitCode : int
{
    exit_success = 0,
    exit_config_error = 2,
    exit_runtime_fault = 3,
};

//! Command-line overrides applied on top of the JSON config
struct CommandOptions
{
    std::filesystem::path config;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> particles;
    unsigned workers{1};
    std::filesystem::path out{"."};
    bool plot{false};
    std::optional<double> threshold;
    std::string format{"csv"};
};

//! Read a config file and check its schema version
nlohmann::json load_config(std::filesystem::path const& path);

// Each command takes a parsed config; relative paths inside it resolve
// against base_dir. Outputs go to opts.out and a summary to \c log.
void cmd_simulate(nlohmann::json const& config,
                  CommandOptions const& opts,
                  std::filesystem::path const& base_dir,
                  std::ostream& log);
void cmd_sweep(nlohmann::json const& config,
               CommandOptions const& opts,
               std::filesystem::path const& base_dir,
               std::ostream& log);
void cmd_analyze(nlohmann::json const& config,
                 CommandOptions const& opts,
                 std::filesystem::path const& base_dir,
                 std::ostream& log);
void cmd_report(nlohmann::json const& config,
                CommandOptions const& opts,
                std::filesystem::path const& base_dir,
                std::ostream& log);

/*!
 * Load the config, dispatch, and map failures to exit codes.
 *
 * Failures are written to \c err as a single JSON object.
 */
int run_command(std::string const& command,
                CommandOptions const& opts,
                std::ostream& log,
                std::ostream& err);

//! Worker count from GETTERFLOW_WORKERS, or hardware concurrency
unsigned default_workers();

//---------------------------------------------------------------------------//
}  // namespace getterflow
