//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file unit/CaptureTest.cc
//---------------------------------------------------------------------------//
#include <cmath>

#include <gtest/gtest.h>

#include "getterflow/Error.hh"
#include "getterflow/stats/Capture.hh"

using namespace getterflow;

namespace
{
CollisionHistogram make_hist(std::map<std::uint32_t, std::uint64_t> counts,
                             std::uint64_t trapped = 0)
{
    CollisionHistogram h;
    h.counts = std::move(counts);
    h.trapped = trapped;
    for (auto [n, c] : h.counts)
        h.total += c;
    h.total += trapped;
    return h;
}

//---------------------------------------------------------------------------//
TEST(Capture, conditional_capture_values)
{
    EXPECT_EQ(conditional_capture(StickingProbability{1.0}, 1), 1.0);
    EXPECT_EQ(conditional_capture(StickingProbability{1.0}, 7), 1.0);
    EXPECT_THROW(conditional_capture(StickingProbability{0.3}, 0), InvalidInput);
    EXPECT_DOUBLE_EQ(conditional_capture(StickingProbability{0.5}, 3), 0.875);
    // Small p: 1 - (1-p)^n ~ n p - n(n-1)/2 p^2
    double p = 1e-9;
    EXPECT_NEAR(conditional_capture(StickingProbability{p}, 10), 10 * p - 45 * p * p, 1e-22);
    EXPECT_THROW(StickingProbability{0.0}, InvalidInput);
    EXPECT_THROW(StickingProbability{1.5}, InvalidInput);
}

TEST(Capture, flat_histogram_is_exact)
{
    auto hist = make_hist({{1, 100000}});
    for (double p : log_spaced(1e-6, 1.0, 13))
    {
        EXPECT_EQ(effective_probability(hist, StickingProbability{p}), p);
        EXPECT_EQ(enhancement(hist, StickingProbability{p}), 1.0);
    }
}

TEST(Capture, matches_direct_sum)
{
    auto hist = make_hist({{1, 40}, {2, 30}, {5, 20}, {40, 10}});
    for (double p : {1e-5, 0.01, 0.2, 0.9, 1.0})
    {
        long double sum = 0;
        for (auto [n, c] : hist.counts)
            sum += c * (1 - std::pow(1.0L - p, static_cast<long double>(n)));
        double expected = static_cast<double>(sum / 100);
        EXPECT_NEAR(effective_probability(hist, StickingProbability{p}), expected, 1e-15);
    }
    EXPECT_EQ(effective_probability(hist, StickingProbability{1.0}), 1.0);
}

TEST(Capture, monotone_and_bounded)
{
    auto hist = make_hist({{1, 5}, {3, 9}, {12, 2}, {300, 1}});
    double prev = 0;
    double prev_ratio = INFINITY;
    for (double p : log_spaced(1e-6, 1.0, 40))
    {
        double pe = effective_probability(hist, StickingProbability{p});
        EXPECT_GE(pe, prev);
        EXPECT_LE(pe, 1.0);
        EXPECT_GE(pe, p);
        double ratio = pe / p;
        EXPECT_LE(ratio, prev_ratio * (1 + 1e-12));
        prev = pe;
        prev_ratio = ratio;
    }
    // Small-p limit recovers the mean collision count
    EXPECT_NEAR(enhancement(hist, StickingProbability{1e-9}), hist.mean_n(), 1e-5);
}

TEST(Capture, trapped_gate)
{
    auto ok = make_hist({{1, 10000}}, 5);
    EXPECT_NO_THROW(enhancement_limit(ok));
    auto bad = make_hist({{1, 1000}}, 20);
    EXPECT_THROW(enhancement_limit(bad), RuntimeFault);
    EXPECT_THROW(effective_probability(bad, StickingProbability{0.1}), RuntimeFault);
    EXPECT_THROW(enhancement_limit(CollisionHistogram{}), RuntimeFault);
}

TEST(Capture, summarize)
{
    auto hist = make_hist({{1, 3}, {2, 1}});
    auto result = summarize(hist, {0.5, 1.0});
    EXPECT_DOUBLE_EQ(result.mean_n, 1.25);
    ASSERT_EQ(result.p_e_table.size(), 2u);
    EXPECT_DOUBLE_EQ(result.p_e_table[0].second, (3 * 0.5 + 0.75) / 4);
    EXPECT_EQ(result.p_e_table[1].second, 1.0);
}

TEST(Capture, log_spaced)
{
    auto v = log_spaced(1e-4, 1.0, 5);
    ASSERT_EQ(v.size(), 5u);
    EXPECT_EQ(v.front(), 1e-4);
    EXPECT_EQ(v.back(), 1.0);
    EXPECT_NEAR(v[2], 1e-2, 1e-16);
}

//---------------------------------------------------------------------------//
}  // namespace
