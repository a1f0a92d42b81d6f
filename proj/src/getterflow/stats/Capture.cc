//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/stats/Capture.cc
//---------------------------------------------------------------------------//
#include "Capture.hh"

#include <cmath>
#include <sstream>

#include "getterflow/Error.hh"

namespace getterflow
{
namespace
{
void check_reliable(CollisionHistogram const& hist, double trapped_threshold)
{
    if (hist.exited() == 0)
        throw RuntimeFault("collision histogram has no exited particles");
    double trapped = hist.trapped_fraction();
    if (trapped > trapped_threshold)
    {
        std::ostringstream msg;
        msg << "trapped fraction " << trapped << " exceeds reliability threshold "
            << trapped_threshold;
        throw RuntimeFault(msg.str());
    }
}
}  // namespace

//---------------------------------------------------------------------------//
StickingProbability::StickingProbability(double p_s) : value_(p_s)
{
    GF_VALIDATE(p_s > 0 && p_s <= 1, "sticking probability must lie in (0, 1]");
}

//---------------------------------------------------------------------------//
double conditional_capture(StickingProbability p_s, std::uint64_t n)
{
    GF_VALIDATE(n >= 1, "collision count must be at least 1");
    if (p_s.value() == 1)
        return 1;
    return -std::expm1(static_cast<double>(n) * std::log1p(-p_s.value()));
}

//---------------------------------------------------------------------------//
double effective_probability(CollisionHistogram const& hist,
                             StickingProbability p_s,
                             double trapped_threshold)
{
    check_reliable(hist, trapped_threshold);
    double exited = static_cast<double>(hist.exited());
    // Normalizing by the summed weights makes single-bin and p_s = 1
    // cases exact.
    double weighted = 0;
    double weights = 0;
    for (auto const& [n, c] : hist.counts)
    {
        double w = static_cast<double>(c) / exited;
        weighted += w * conditional_capture(p_s, n);
        weights += w;
    }
    return weighted / weights;
}

double enhancement(CollisionHistogram const& hist,
                   StickingProbability p_s,
                   double trapped_threshold)
{
    return effective_probability(hist, p_s, trapped_threshold) / p_s.value();
}

LimitEnhancement enhancement_limit(CollisionHistogram const& hist, double trapped_threshold)
{
    check_reliable(hist, trapped_threshold);
    return {hist.mean_n(), hist.stderr_mean_n()};
}

//---------------------------------------------------------------------------//
PumpingResult summarize(CollisionHistogram const& hist,
                        std::vector<double> const& p_s_values,
                        double trapped_threshold)
{
    PumpingResult result;
    auto limit = enhancement_limit(hist, trapped_threshold);
    result.mean_n = limit.value;
    result.stderr_mean_n = limit.stderr_value;
    result.enhancement_limit = limit.value;
    for (double p : p_s_values)
    {
        result.p_e_table.emplace_back(
            p, effective_probability(hist, StickingProbability{p}, trapped_threshold));
    }
    return result;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t points)
{
    GF_VALIDATE(lo > 0 && hi >= lo, "log spacing needs 0 < lo <= hi");
    GF_VALIDATE(points >= 1, "log spacing needs at least one point");
    std::vector<double> result;
    if (points == 1)
        return {lo};
    double llo = std::log10(lo);
    double lhi = std::log10(hi);
    for (std::size_t i = 0; i < points; ++i)
    {
        double f = static_cast<double>(i) / static_cast<double>(points - 1);
        result.push_back(std::pow(10.0, llo + f * (lhi - llo)));
    }
    result.front() = lo;
    result.back() = hi;
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
