//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/tracer/CollisionHistogram.cc
//---------------------------------------------------------------------------//
#include "CollisionHistogram.hh"

#include <algorithm>
#include <cmath>
#include <string>

#include "getterflow/Error.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
std::uint64_t CollisionHistogram::exited() const
{
    std::uint64_t result = 0;
    for (auto const& [n, c] : counts)
        result += c;
    return result;
}

double CollisionHistogram::mean_n() const
{
    std::uint64_t num = 0;
    std::uint64_t den = 0;
    for (auto const& [n, c] : counts)
    {
        num += static_cast<std::uint64_t>(n) * c;
        den += c;
    }
    if (den == 0)
        return std::nan("");
    return static_cast<double>(num) / static_cast<double>(den);
}

double CollisionHistogram::stderr_mean_n() const
{
    long double sum = 0;
    long double sum_sq = 0;
    long double count = 0;
    for (auto const& [n, c] : counts)
    {
        long double nn = n;
        sum += nn * c;
        sum_sq += nn * nn * c;
        count += c;
    }
    if (count < 2)
        return count == 1 ? 0.0 : std::nan("");
    long double var = (sum_sq - sum * sum / count) / (count - 1);
    if (var < 0)
        var = 0;
    return static_cast<double>(std::sqrt(var / count));
}

double CollisionHistogram::trapped_fraction() const
{
    if (total == 0)
        return 0;
    return static_cast<double>(trapped) / static_cast<double>(total);
}

void CollisionHistogram::merge(CollisionHistogram const& other)
{
    for (auto const& [n, c] : other.counts)
        counts[n] += c;
    total += other.total;
    trapped += other.trapped;
    faults += other.faults;
    fault_particles.insert(
        fault_particles.end(), other.fault_particles.begin(), other.fault_particles.end());
    std::sort(fault_particles.begin(), fault_particles.end());
    if (fault_particles.size() > max_recorded_faults)
        fault_particles.resize(max_recorded_faults);
}

//---------------------------------------------------------------------------//
nlohmann::json histogram_to_json(CollisionHistogram const& hist,
                                 nlohmann::json const& geometry,
                                 EmissionModel model)
{
    nlohmann::json counts = nlohmann::json::object();
    for (auto const& [n, c] : hist.counts)
        counts[std::to_string(n)] = c;

    nlohmann::json j;
    j["geometry"] = geometry;
    j["model"] = to_cstring(model);
    j["seed"] = hist.seed;
    j["n_particles"] = hist.n_particles_requested;
    j["max_collisions"] = hist.max_collisions;
    j["counts"] = counts;
    j["trapped"] = hist.trapped;
    j["faults"] = hist.faults;
    j["fault_particles"] = hist.fault_particles;
    j["mean_n"] = hist.exited() ? nlohmann::json(hist.mean_n()) : nlohmann::json();
    j["stderr"] = hist.exited() ? nlohmann::json(hist.stderr_mean_n()) : nlohmann::json();
    return j;
}

CollisionHistogram histogram_from_json(nlohmann::json const& j)
{
    CollisionHistogram hist;
    try
    {
        hist.seed = j.at("seed").get<std::uint64_t>();
        hist.n_particles_requested = j.at("n_particles").get<std::uint64_t>();
        hist.max_collisions = j.value("max_collisions", std::uint32_t{0});
        hist.trapped = j.at("trapped").get<std::uint64_t>();
        hist.faults = j.value("faults", std::uint64_t{0});
        if (j.contains("fault_particles"))
            hist.fault_particles = j["fault_particles"].get<std::vector<std::uint64_t>>();
        for (auto const& [key, value] : j.at("counts").items())
        {
            auto n = std::stoul(key);
            GF_VALIDATE(n >= 1, "histogram collision counts must be >= 1");
            hist.counts[static_cast<std::uint32_t>(n)] = value.get<std::uint64_t>();
        }
    }
    catch (nlohmann::json::exception const& e)
    {
        throw ParseError(std::string("malformed histogram JSON: ") + e.what());
    }
    catch (std::logic_error const& e)
    {
        throw ParseError(std::string("malformed histogram JSON: ") + e.what());
    }
    hist.total = hist.exited() + hist.trapped + hist.faults;
    return hist;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
