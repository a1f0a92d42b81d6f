//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/analysis/RateFit.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace getterflow
{
struct RateTable;

//---------------------------------------------------------------------------//
/*!
 * Straight-line fit of -dp/dt = gamma * p - c.
 *
 * Standard errors are NaN when the fit has no residual degrees of freedom.
 */
struct RateFit
{
    std::string label;
    double gamma{0};  //!< [1/s]
    double c{0};  //!< [mbar/s]
    double stderr_gamma{0};
    double stderr_c{0};
    double p_min{0};
    double p_max{0};
    std::size_t n_points{0};
    double residual_rms{0};
};

//! Fit (p, -dp/dt) pairs
RateFit fit_gamma(std::vector<std::pair<double, double>> const& points);

//! Fit a rate table, negating dp/dt
RateFit fit_gamma(RateTable const& table);

nlohmann::json to_json(RateFit const& fit);
RateFit rate_fit_from_json(nlohmann::json const& j);

//---------------------------------------------------------------------------//
}  // namespace getterflow
