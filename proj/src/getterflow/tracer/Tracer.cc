//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/tracer/Tracer.cc
//---------------------------------------------------------------------------//
#include "Tracer.hh"

#include <algorithm>
#include <thread>
#include <vector>

#include "getterflow/Error.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
TraceOutcome trace_particle(Geometry const& geo,
                            EmissionModel model,
                            RngStream& rng,
                            std::uint32_t max_collisions)
{
    GF_VALIDATE(max_collisions >= 1, "max_collisions must be at least 1");
    Ray incident = sample_incident(geo, rng);
    return trace_from(geo, geo.tolerance(), incident, model, rng, max_collisions);
}

//---------------------------------------------------------------------------//
namespace
{
void trace_range(Geometry const& geo,
                 EmissionModel model,
                 std::uint64_t begin,
                 std::uint64_t end,
                 std::uint64_t seed,
                 std::uint32_t max_collisions,
                 CollisionHistogram& hist)
{
    for (std::uint64_t i = begin; i < end; ++i)
    {
        RngStream rng(seed, i);
        auto outcome = trace_particle(geo, model, rng, max_collisions);
        ++hist.total;
        switch (outcome.status)
        {
            case TraceOutcome::Status::exited:
                ++hist.counts[outcome.collisions];
                break;
            case TraceOutcome::Status::trapped:
                ++hist.trapped;
                break;
            case TraceOutcome::Status::fault:
                ++hist.faults;
                if (hist.fault_particles.size() < CollisionHistogram::max_recorded_faults)
                    hist.fault_particles.push_back(i);
                break;
        }
    }
}
}  // namespace

//---------------------------------------------------------------------------//
CollisionHistogram run_simulation(Geometry const& geo,
                                  EmissionModel model,
                                  std::uint64_t n_particles,
                                  std::uint64_t seed,
                                  std::uint32_t max_collisions,
                                  unsigned workers)
{
    GF_VALIDATE(n_particles >= 1, "n_particles must be at least 1");
    GF_VALIDATE(max_collisions >= 1, "max_collisions must be at least 1");
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, n_particles));

    std::vector<CollisionHistogram> partial(workers);
    std::uint64_t chunk = n_particles / workers;
    std::uint64_t extra = n_particles % workers;
    auto bounds = [&](unsigned w) {
        std::uint64_t begin = w * chunk + std::min<std::uint64_t>(w, extra);
        return std::pair{begin, begin + chunk + (w < extra ? 1 : 0)};
    };

    if (workers == 1)
    {
        trace_range(geo, model, 0, n_particles, seed, max_collisions, partial[0]);
    }
    else
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
        {
            auto [begin, end] = bounds(w);
            threads.emplace_back([&, w, begin = begin, end = end] {
                trace_range(geo, model, begin, end, seed, max_collisions, partial[w]);
            });
        }
    }

    CollisionHistogram result;
    result.seed = seed;
    result.n_particles_requested = n_particles;
    result.max_collisions = max_collisions;
    for (auto const& p : partial)
        result.merge(p);
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
