//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/analysis/Rates.cc
//---------------------------------------------------------------------------//
#include "Rates.hh"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "getterflow/Error.hh"
#include "getterflow/NumberFormat.hh"

namespace getterflow
{
namespace
{
//---------------------------------------------------------------------------//
// Three-point derivative at x0 using nodes (x0, x1, x2) in any order
double three_point(double x0, double y0, double x1, double y1, double x2, double y2)
{
    double a = x1 - x0;
    double b = x2 - x0;
    // Lagrange basis derivatives evaluated at x0
    double c0 = -(a + b) / (a * b);
    double c1 = b / (a * (b - a));
    double c2 = -a / (b * (b - a));
    return c0 * y0 + c1 * y1 + c2 * y2;
}

double local_quadratic_slope(PressureSeries const& series, std::size_t center, int half)
{
    auto const& s = series.samples;
    std::size_t n = s.size();
    std::size_t lo = center >= static_cast<std::size_t>(half) ? center - half : 0;
    std::size_t hi = std::min(n - 1, center + half);
    // Keep the window width when clipped at the ends
    std::size_t width = std::min<std::size_t>(2 * half + 1, n);
    if (hi - lo + 1 < width)
    {
        if (lo == 0)
            hi = width - 1;
        else
            lo = n - width;
    }

    double t0 = s[center].t;
    double p0 = s[center].p;
    std::array<double, 5> m{};  // sums of x^k, k = 0..4
    std::array<double, 3> r{};  // sums of y x^k
    for (std::size_t i = lo; i <= hi; ++i)
    {
        double x = s[i].t - t0;
        double y = s[i].p - p0;
        double xk = 1;
        for (int k = 0; k < 5; ++k)
        {
            m[k] += xk;
            if (k < 3)
                r[k] += y * xk;
            xk *= x;
        }
    }
    // Solve the 3x3 normal equations by Cramer's rule for the linear term
    auto det3 = [](double a, double b, double c, double d, double e, double f,
                   double g, double h, double i) {
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    };
    double det = det3(m[0], m[1], m[2], m[1], m[2], m[3], m[2], m[3], m[4]);
    if (det == 0)
        throw InvalidInput("smoothing window is degenerate");
    double det_b = det3(m[0], r[0], m[2], m[1], r[1], m[3], m[2], r[2], m[4]);
    return det_b / det;
}
}  // namespace

//---------------------------------------------------------------------------//
std::vector<double> time_derivative(PressureSeries const& series, DerivativeOptions const& opts)
{
    series.validate();
    auto const& s = series.samples;
    std::size_t n = s.size();
    GF_VALIDATE(n >= 3, "rate estimation needs at least three samples");

    std::vector<double> result(n);
    if (opts.smooth)
    {
        GF_VALIDATE(opts.half_window >= 1, "smoothing half window must be positive");
        for (std::size_t i = 0; i < n; ++i)
            result[i] = local_quadratic_slope(series, i, opts.half_window);
        return result;
    }

    for (std::size_t i = 1; i + 1 < n; ++i)
    {
        double h1 = s[i].t - s[i - 1].t;
        double h2 = s[i + 1].t - s[i].t;
        if (h1 == h2)
            result[i] = (s[i + 1].p - s[i - 1].p) / (2 * h1);
        else
            result[i] = three_point(s[i].t, s[i].p, s[i - 1].t, s[i - 1].p,
                                    s[i + 1].t, s[i + 1].p);
    }
    result.front() = three_point(s[0].t, s[0].p, s[1].t, s[1].p, s[2].t, s[2].p);
    result.back() = three_point(s[n - 1].t, s[n - 1].p, s[n - 2].t, s[n - 2].p,
                                s[n - 3].t, s[n - 3].p);
    return result;
}

//---------------------------------------------------------------------------//
std::vector<double> geometric_grid(double p_lo, double p_hi, int points)
{
    GF_VALIDATE(p_lo > 0 && p_hi > 0, "pressure grid bounds must be positive");
    GF_VALIDATE(points >= 2, "pressure grid needs at least two points");
    if (p_lo > p_hi)
        std::swap(p_lo, p_hi);
    std::vector<double> grid(points);
    double ratio = std::log(p_hi / p_lo);
    for (int i = 0; i < points; ++i)
        grid[i] = p_lo * std::exp(ratio * i / (points - 1));
    grid.front() = p_lo;
    grid.back() = p_hi;
    return grid;
}

std::vector<double> common_grid(std::vector<PressureSeries> const& series, int points)
{
    GF_VALIDATE(!series.empty(), "no series to build a pressure grid from");
    double lo = 0;
    double hi = std::numeric_limits<double>::infinity();
    for (auto const& s : series)
    {
        GF_VALIDATE(!s.empty(), "empty series '" + s.label + "'");
        auto [mn, mx] = std::minmax_element(
            s.samples.begin(), s.samples.end(),
            [](auto const& a, auto const& b) { return a.p < b.p; });
        lo = std::max(lo, mn->p);
        hi = std::min(hi, mx->p);
    }
    GF_VALIDATE(lo < hi, "pressure ranges of the series do not overlap");
    return geometric_grid(lo, hi, points);
}

//---------------------------------------------------------------------------//
RateTable rate_vs_pressure(PressureSeries const& series,
                           std::vector<double> const& grid,
                           DerivativeOptions const& opts)
{
    auto dpdt = time_derivative(series, opts);
    auto const& s = series.samples;

    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&s](auto a, auto b) { return s[a].p < s[b].p; });
    std::vector<double> px(order.size());
    std::vector<double> ry(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
    {
        px[k] = s[order[k]].p;
        ry[k] = dpdt[order[k]];
    }

    RateTable table;
    table.label = series.label;
    std::size_t omitted = 0;
    for (double g : grid)
    {
        if (!(g >= px.front() && g <= px.back()))
        {
            ++omitted;
            continue;
        }
        auto hi = static_cast<std::size_t>(
            std::lower_bound(px.begin(), px.end(), g) - px.begin());
        double value;
        if (px[hi] == g)
        {
            // Average every sample sitting exactly on the grid pressure
            double sum = 0;
            std::size_t count = 0;
            for (std::size_t k = hi; k < px.size() && px[k] == g; ++k, ++count)
                sum += ry[k];
            value = sum / static_cast<double>(count);
        }
        else
        {
            std::size_t lo = hi - 1;
            double w = (g - px[lo]) / (px[hi] - px[lo]);
            value = ry[lo] + w * (ry[hi] - ry[lo]);
        }
        table.pressure.push_back(g);
        table.rate.push_back(value);
    }
    if (omitted > 0)
    {
        table.warnings.push_back(std::to_string(omitted)
                                 + " grid point(s) outside the pressure range of '"
                                 + series.label + "' omitted");
    }
    return table;
}

//---------------------------------------------------------------------------//
RateTable subtract_control(RateTable const& sample, RateTable const& control)
{
    if (sample.pressure != control.pressure)
    {
        throw InvalidInput("pressure grids of '" + sample.label + "' and control '"
                           + control.label + "' differ");
    }
    RateTable result = sample;
    for (std::size_t i = 0; i < result.size(); ++i)
        result.rate[i] = sample.rate[i] - control.rate[i];
    result.warnings.insert(
        result.warnings.end(), control.warnings.begin(), control.warnings.end());
    return result;
}

void write_rate_table(std::ostream& os, RateTable const& table)
{
    os << "p_mbar,dpdt_mbar_per_s\n";
    for (std::size_t i = 0; i < table.size(); ++i)
        os << format_double(table.pressure[i]) << ',' << format_double(table.rate[i]) << '\n';
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
