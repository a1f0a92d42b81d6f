//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/analysis/RateFit.cc
//---------------------------------------------------------------------------//
#include "RateFit.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "getterflow/Error.hh"
#include "Rates.hh"

namespace getterflow
{
namespace
{
double or_nan(nlohmann::json const& j)
{
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}
}  // namespace

//---------------------------------------------------------------------------//
RateFit fit_gamma(std::vector<std::pair<double, double>> const& points)
{
    std::size_t n = points.size();
    GF_VALIDATE(n >= 2, "rate fit needs at least two points");
    for (auto const& [x, y] : points)
        GF_VALIDATE(std::isfinite(x) && std::isfinite(y), "rate fit input is not finite");

    double xm = 0;
    double ym = 0;
    for (auto const& [x, y] : points)
    {
        xm += x;
        ym += y;
    }
    xm /= static_cast<double>(n);
    ym /= static_cast<double>(n);

    double sxx = 0;
    double sxy = 0;
    for (auto const& [x, y] : points)
    {
        sxx += (x - xm) * (x - xm);
        sxy += (x - xm) * (y - ym);
    }
    auto [lo, hi] = std::minmax_element(
        points.begin(), points.end(), [](auto const& a, auto const& b) {
            return a.first < b.first;
        });
    if (!(sxx > 0) || lo->first == hi->first)
        throw InvalidInput("rate fit is rank deficient: fewer than two distinct pressures");

    RateFit fit;
    fit.n_points = n;
    fit.p_min = lo->first;
    fit.p_max = hi->first;
    fit.gamma = sxy / sxx;
    double intercept = ym - fit.gamma * xm;
    fit.c = -intercept;

    double ssr = 0;
    for (auto const& [x, y] : points)
    {
        double r = y - (intercept + fit.gamma * x);
        ssr += r * r;
    }
    fit.residual_rms = std::sqrt(ssr / static_cast<double>(n));
    if (n > 2)
    {
        double s2 = ssr / static_cast<double>(n - 2);
        double sum_x2 = 0;
        for (auto const& p : points)
            sum_x2 += p.first * p.first;
        fit.stderr_gamma = std::sqrt(s2 / sxx);
        fit.stderr_c = std::sqrt(s2 * sum_x2 / (static_cast<double>(n) * sxx));
    }
    else
    {
        fit.stderr_gamma = std::numeric_limits<double>::quiet_NaN();
        fit.stderr_c = std::numeric_limits<double>::quiet_NaN();
    }
    return fit;
}

RateFit fit_gamma(RateTable const& table)
{
    std::vector<std::pair<double, double>> points(table.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        points[i] = {table.pressure[i], -table.rate[i]};
    RateFit fit = fit_gamma(points);
    fit.label = table.label;
    return fit;
}

//---------------------------------------------------------------------------//
nlohmann::json to_json(RateFit const& fit)
{
    return {{"label", fit.label},
            {"gamma", fit.gamma},
            {"c", fit.c},
            {"stderr_gamma", fit.stderr_gamma},
            {"stderr_c", fit.stderr_c},
            {"pressure_range", {fit.p_min, fit.p_max}},
            {"n_points", fit.n_points},
            {"residual_rms", fit.residual_rms}};
}

RateFit rate_fit_from_json(nlohmann::json const& j)
{
    RateFit fit;
    fit.label = j.value("label", std::string{});
    fit.gamma = j.at("gamma").get<double>();
    fit.c = j.at("c").get<double>();
    fit.stderr_gamma = or_nan(j.at("stderr_gamma"));
    fit.stderr_c = or_nan(j.at("stderr_c"));
    fit.p_min = j.at("pressure_range").at(0).get<double>();
    fit.p_max = j.at("pressure_range").at(1).get<double>();
    fit.n_points = j.at("n_points").get<std::size_t>();
    fit.residual_rms = j.value("residual_rms", 0.0);
    return fit;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
