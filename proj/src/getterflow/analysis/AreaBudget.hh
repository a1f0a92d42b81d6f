//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/analysis/AreaBudget.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string_view>

namespace getterflow
{
//---------------------------------------------------------------------------//
//! Coated areas of a structured sample [mm^2]
struct AreaBudget
{
    double a_r{0};  //!< total coated area
    double a_s{0};  //!< structured region
    double a_p{0};  //!< pocket interiors
    double a_v{0};  //!< array sides

    void validate() const;
};

//---------------------------------------------------------------------------//
/*!
 * How a sample's coated area splits into flat and structured parts.
 *
 * - plain: structured region only, remainder flat
 * - pocket_only: pocket interiors only, remainder flat
 * - sample3_min: sides counted as structured area
 * - sample3_max: sides counted as flat area
 */
enum class AreaMode
{
    plain,
    pocket_only,
    sample3_min,
    sample3_max,
};

inline constexpr AreaMode all_area_modes[]
    = {AreaMode::plain, AreaMode::pocket_only, AreaMode::sample3_min, AreaMode::sample3_max};

char const* to_cstring(AreaMode mode);
AreaMode area_mode_from_string(std::string_view name);

struct AreaSplit
{
    double flat;  //!< F_A
    double structured;  //!< S_A
};

AreaSplit area_split(AreaBudget const& budget, AreaMode mode);

//---------------------------------------------------------------------------//
struct PerAreaCoefficient
{
    double gamma_1s;  //!< flat reference per unit area [1/(s mm^2)]
    double gamma_s;  //!< structured region per unit area [1/(s mm^2)]
    double eta;  //!< gamma_s / gamma_1s
    bool negative_numerator;  //!< structured region pumps worse than flat
};

PerAreaCoefficient per_area_coefficient(double gamma_i,
                                        double gamma_1,
                                        AreaBudget const& budget,
                                        AreaMode mode);

//---------------------------------------------------------------------------//
}  // namespace getterflow
