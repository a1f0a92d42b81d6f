//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/tracer/Tracer.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>

#include "getterflow/Types.hh"
#include "getterflow/geometry/Geometry.hh"
#include "getterflow/sampler/RngStream.hh"
#include "getterflow/sampler/Sampler.hh"
#include "CollisionHistogram.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
inline constexpr std::uint32_t default_max_collisions = 10'000;

//---------------------------------------------------------------------------//
//! Fate of one traced particle
struct TraceOutcome
{
    enum class Status
    {
        exited,  //!< Left through the top plane after \c collisions hits
        trapped,  //!< Collision budget exhausted
        fault,  //!< Geometry leak (no intersection found)
    };

    Status status{Status::exited};
    std::uint32_t collisions{0};
};

//---------------------------------------------------------------------------//
/*!
 * Follow a particle from a given entry ray until it leaves the top plane.
 *
 * Each facet hit counts one collision and re-emits the particle from the hit
 * point, offset by \c offset along the facet normal. A particle still inside
 * after \c max_collisions hits is reported as trapped.
 */
template<Intersectable S>
TraceOutcome trace_from(S const& surface,
                        double offset,
                        Ray ray,
                        EmissionModel model,
                        RngStream& rng,
                        std::uint32_t max_collisions)
{
    TraceOutcome out;
    while (true)
    {
        auto hit = surface.intersect(ray);
        if (!hit)
        {
            out.status = TraceOutcome::Status::fault;
            return out;
        }
        if (hit->kind == Hit::Kind::top_plane_exit)
        {
            out.status = TraceOutcome::Status::exited;
            return out;
        }
        if (out.collisions == max_collisions)
        {
            out.status = TraceOutcome::Status::trapped;
            return out;
        }
        ++out.collisions;
        ray.direction = sample_emission(hit->normal, model, rng);
        ray.origin = hit->point + offset * hit->normal;
    }
}

//---------------------------------------------------------------------------//
//! Sample an incident particle and trace it through the geometry
TraceOutcome trace_particle(Geometry const& geo,
                            EmissionModel model,
                            RngStream& rng,
                            std::uint32_t max_collisions = default_max_collisions);

//---------------------------------------------------------------------------//
/*!
 * Trace many independent particles and tally collision counts.
 *
 * Particle i draws from RngStream(seed, i), and the tally is a sum of
 * integer counts, so the result does not depend on \c workers.
 * A \c workers value of 0 uses the hardware concurrency.
 */
CollisionHistogram run_simulation(Geometry const& geo,
                                  EmissionModel model,
                                  std::uint64_t n_particles,
                                  std::uint64_t seed,
                                  std::uint32_t max_collisions = default_max_collisions,
                                  unsigned workers = 1);

//---------------------------------------------------------------------------//
}  // namespace getterflow
