//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/sweep/Sweep.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "getterflow/Types.hh"
#include "getterflow/tracer/Tracer.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
enum class SweepFamily
{
    polygon_pocket,
    cone_array,
    heightmap_stretch,
};

char const* to_cstring(SweepFamily family);
SweepFamily sweep_family_from_string(std::string const& name);

inline constexpr std::uint64_t default_sweep_particles = 100'000;
inline constexpr std::uint64_t default_heightmap_particles = 35'000;

/*!
 * One parameter scan over a geometry family.
 *
 * \c base holds the fixed geometry parameters in the same JSON form the
 * geometry builders accept; the varied parameter overrides one key. For
 * height-map stretches \c base is a height-map source and the varied
 * parameter is always \c side_to_depth.
 */
struct SweepSpec
{
    SweepFamily family{SweepFamily::polygon_pocket};
    std::string parameter{"theta_deg"};
    std::vector<double> values;
    nlohmann::json base = nlohmann::json::object();
    std::uint64_t n_particles{default_sweep_particles};
    std::uint64_t seed{1};
    std::vector<EmissionModel> models{EmissionModel::cosine_law};
    std::uint32_t max_collisions{default_max_collisions};

    void validate() const;
};

SweepSpec sweep_spec_from_json(nlohmann::json const& j);
nlohmann::json to_json(SweepSpec const& spec);

//---------------------------------------------------------------------------//
struct SweepRow
{
    std::vector<double> params;  //!< Ordered as SweepTable::param_names
    EmissionModel model;
    double mean_n;
    double stderr_mean_n;
    double trapped_fraction;
    std::uint64_t n_particles;
    std::uint64_t seed;
    std::optional<std::string> error;
};

struct SweepTable
{
    SweepFamily family;
    std::string varied;
    std::vector<std::string> param_names;
    std::vector<SweepRow> rows;

    std::size_t varied_index() const;
};

//! Called after each completed row
using SweepProgress = std::function<void(SweepRow const&)>;

/*!
 * Run every (value, model) pair in value-major order.
 *
 * Row seeds hash the parameter value and model rather than the row
 * position, so removing one value leaves every other row unchanged.
 * A row that cannot be built or traced carries an error message and the
 * sweep continues.
 */
SweepTable run_sweep(SweepSpec const& spec,
                     unsigned workers = 1,
                     std::filesystem::path const& base_dir = {},
                     SweepProgress const& progress = {});

std::uint64_t row_seed(SweepSpec const& spec, double value, EmissionModel model);

//! family, params..., model, mean_n, stderr, n_particles, seed, error
void write_sweep_csv(std::ostream& os, SweepTable const& table);

//! Line plot of mean_n against the varied parameter, one line per model
void write_sweep_svg(std::ostream& os, SweepTable const& table);

//---------------------------------------------------------------------------//
}  // namespace getterflow
