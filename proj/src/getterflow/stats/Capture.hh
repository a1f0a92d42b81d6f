//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/stats/Capture.hh
//! \brief Capture probabilities and pumping enhancement from P(n)
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "getterflow/tracer/CollisionHistogram.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
//! Single-collision sticking probability, 0 < p_s <= 1
class StickingProbability
{
  public:
    explicit StickingProbability(double p_s);
    double value() const { return value_; }

  private:
    double value_;
};

//! Trapped fraction above which P(n) is considered unreliable
inline constexpr double default_trapped_threshold = 1e-3;

//---------------------------------------------------------------------------//
/*!
 * Probability that a particle making n collisions is captured:
 * 1 - (1 - p_s)^n, evaluated as -expm1(n log1p(-p_s)).
 */
double conditional_capture(StickingProbability p_s, std::uint64_t n);

//---------------------------------------------------------------------------//
/*!
 * Effective capture probability per entering particle, averaging
 * conditional_capture over the exited-particle distribution P(n).
 *
 * Throws RuntimeFault if the histogram is empty or its trapped fraction
 * exceeds \c trapped_threshold.
 */
double effective_probability(CollisionHistogram const& hist,
                             StickingProbability p_s,
                             double trapped_threshold = default_trapped_threshold);

//! P_e / p_s
double enhancement(CollisionHistogram const& hist,
                   StickingProbability p_s,
                   double trapped_threshold = default_trapped_threshold);

//! Enhancement in the p_s -> 0 limit, which is the mean collision count
struct LimitEnhancement
{
    double value;
    double stderr_value;
};
LimitEnhancement enhancement_limit(CollisionHistogram const& hist,
                                   double trapped_threshold = default_trapped_threshold);

//---------------------------------------------------------------------------//
//! Summary of a histogram over a range of sticking probabilities
struct PumpingResult
{
    double mean_n{};
    double stderr_mean_n{};
    std::vector<std::pair<double, double>> p_e_table;  //!< (p_s, P_e)
    double enhancement_limit{};
};

PumpingResult summarize(CollisionHistogram const& hist,
                        std::vector<double> const& p_s_values,
                        double trapped_threshold = default_trapped_threshold);

//! Logarithmically spaced values from lo to hi inclusive
std::vector<double> log_spaced(double lo, double hi, std::size_t points);

//---------------------------------------------------------------------------//
}  // namespace getterflow
