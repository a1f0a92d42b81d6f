//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/tracer/CollisionHistogram.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "json.hpp"

#include "getterflow/Types.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
/*!
 * Tally of particles by number of surface collisions before exit.
 *
 * \c total counts every traced particle:
 * total = sum(counts) + trapped + faults = n_particles_requested.
 * Moments are taken over exited particles only.
 */
struct CollisionHistogram
{
    std::map<std::uint32_t, std::uint64_t> counts;
    std::uint64_t total{0};
    std::uint64_t trapped{0};
    std::uint64_t faults{0};
    //! Indices of the first few particles that hit a geometry leak
    std::vector<std::uint64_t> fault_particles;
    std::uint64_t seed{0};
    std::uint64_t n_particles_requested{0};
    std::uint32_t max_collisions{0};

    static constexpr std::size_t max_recorded_faults = 32;

    std::uint64_t exited() const;
    double mean_n() const;
    //! Sample standard deviation over sqrt(N)
    double stderr_mean_n() const;
    double trapped_fraction() const;

    //! Order-independent accumulation of another partial tally
    void merge(CollisionHistogram const& other);
};

//---------------------------------------------------------------------------//
/*!
 * Shared result schema:
 * {geometry, model, seed, n_particles, max_collisions, counts, trapped,
 *  faults, mean_n, stderr}
 */
nlohmann::json histogram_to_json(CollisionHistogram const& hist,
                                 nlohmann::json const& geometry,
                                 EmissionModel model);

//! Inverse of histogram_to_json (ignores derived fields)
CollisionHistogram histogram_from_json(nlohmann::json const& j);

//---------------------------------------------------------------------------//
}  // namespace getterflow
