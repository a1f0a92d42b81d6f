//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/analysis/PressureSeries.hh
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace getterflow
{
//---------------------------------------------------------------------------//
struct PressureSample
{
    double t;  //!< [s]
    double p;  //!< [mbar]
};

//---------------------------------------------------------------------------//
/*!
 * Time-ordered chamber pressure log.
 *
 * Times are strictly increasing and pressures positive.
 */
struct PressureSeries
{
    std::vector<PressureSample> samples;
    std::string label;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
    void validate() const;
};

//---------------------------------------------------------------------------//
/*!
 * Column mapping for delimited pressure logs.
 *
 * Columns are selected by zero-based index, or by header name when the
 * corresponding name is set. A delimiter of '\0' accepts commas, tabs,
 * semicolons and runs of spaces. A header row is detected automatically
 * when the first data line does not parse as numbers.
 */
struct LogFormat
{
    char delimiter{'\0'};
    std::size_t time_column{0};
    std::size_t pressure_column{1};
    std::optional<std::string> time_name;
    std::optional<std::string> pressure_name;
    double time_scale{1};  //!< Multiplies raw time values to give seconds
    double pressure_scale{1};  //!< Multiplies raw pressures to give mbar
};

PressureSeries load_pressure_log(std::istream& is,
                                 LogFormat const& format = {},
                                 std::string label = {});
PressureSeries load_pressure_log(std::filesystem::path const& path,
                                 LogFormat const& format = {});

//! Write a two-column "t_s,p_mbar" CSV at round-trip precision
void write_pressure_log(std::ostream& os, PressureSeries const& series);

//---------------------------------------------------------------------------//
//! Default decline threshold [mbar]
inline constexpr double default_threshold_mbar = 1e-5;

/*!
 * Keep the decline after the initial spike.
 *
 * Returns the suffix starting at the first sample, at or after the global
 * maximum, whose pressure is at or below the threshold.
 */
PressureSeries truncate_at_threshold(PressureSeries const& series,
                                     double threshold = default_threshold_mbar);

//---------------------------------------------------------------------------//
}  // namespace getterflow
