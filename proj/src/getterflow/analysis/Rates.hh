//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/analysis/Rates.hh
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "PressureSeries.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
//! dp/dt [mbar/s] tabulated on a pressure grid [mbar]
struct RateTable
{
    std::string label;
    std::vector<double> pressure;
    std::vector<double> rate;
    std::vector<std::string> warnings;

    std::size_t size() const { return pressure.size(); }
};

//---------------------------------------------------------------------------//
struct DerivativeOptions
{
    //! Replace the three-point stencil by a local quadratic least-squares fit
    bool smooth{false};
    //! Samples on each side of the center point when smoothing
    int half_window{3};
};

//! dp/dt at every sample of the series
std::vector<double> time_derivative(PressureSeries const& series,
                                    DerivativeOptions const& opts = {});

//! Geometrically spaced ascending grid between two positive pressures
std::vector<double> geometric_grid(double p_lo, double p_hi, int points = 40);

//! Grid spanning the pressure range shared by all given series
std::vector<double> common_grid(std::vector<PressureSeries> const& series, int points = 40);

RateTable rate_vs_pressure(PressureSeries const& series,
                           std::vector<double> const& grid,
                           DerivativeOptions const& opts = {});

RateTable subtract_control(RateTable const& sample, RateTable const& control);

//! CSV with columns p_mbar,dpdt_mbar_per_s
void write_rate_table(std::ostream& os, RateTable const& table);

//---------------------------------------------------------------------------//
}  // namespace getterflow
