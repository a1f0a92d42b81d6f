//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/analysis/AreaBudget.cc
//---------------------------------------------------------------------------//
#include "AreaBudget.hh"

#include <cmath>
#include <string>

#include "getterflow/Error.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
void AreaBudget::validate() const
{
    for (double a : {a_r, a_s, a_p, a_v})
        GF_VALIDATE(std::isfinite(a) && a > 0, "areas must be positive and finite");
    GF_VALIDATE(a_p <= a_s, "pocket area exceeds structured area");
    GF_VALIDATE(a_s <= a_r, "structured area exceeds total coated area");
}

char const* to_cstring(AreaMode mode)
{
    switch (mode)
    {
        case AreaMode::plain:
            return "plain";
        case AreaMode::pocket_only:
            return "pocket_only";
        case AreaMode::sample3_min:
            return "sample3_min";
        case AreaMode::sample3_max:
            return "sample3_max";
    }
    return "?";
}

AreaMode area_mode_from_string(std::string_view name)
{
    for (AreaMode m : all_area_modes)
    {
        if (name == to_cstring(m))
            return m;
    }
    throw InvalidInput("unknown area mode '" + std::string(name) + "'");
}

AreaSplit area_split(AreaBudget const& b, AreaMode mode)
{
    switch (mode)
    {
        case AreaMode::plain:
            return {b.a_r - b.a_s, b.a_s};
        case AreaMode::pocket_only:
            return {b.a_r - b.a_p, b.a_p};
        case AreaMode::sample3_min:
            return {b.a_r - b.a_s, b.a_s + b.a_v};
        case AreaMode::sample3_max:
            return {b.a_r - b.a_s + b.a_v, b.a_s};
    }
    throw InvalidInput("invalid area mode");
}

//---------------------------------------------------------------------------//
PerAreaCoefficient per_area_coefficient(double gamma_i,
                                        double gamma_1,
                                        AreaBudget const& budget,
                                        AreaMode mode)
{
    budget.validate();
    GF_VALIDATE(gamma_1 > 0 && std::isfinite(gamma_1),
                "reference pumping coefficient must be positive");
    GF_VALIDATE(std::isfinite(gamma_i), "pumping coefficient must be finite");

    auto split = area_split(budget, mode);
    PerAreaCoefficient result;
    result.gamma_1s = gamma_1 / budget.a_r;
    double numerator = gamma_i - result.gamma_1s * split.flat;
    result.negative_numerator = numerator < 0;
    result.gamma_s = numerator / split.structured;
    result.eta = result.gamma_s / result.gamma_1s;
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
