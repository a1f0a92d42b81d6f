//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/sampler/Sampler.cc
//---------------------------------------------------------------------------//
#include "Sampler.hh"

#include <cmath>

#include "getterflow/geometry/Footprint.hh"
#include "getterflow/geometry/Geometry.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
Vec3 sample_cosine_hemisphere(RngStream& rng)
{
    double r2 = rng.uniform();
    double phi = 2 * pi * rng.uniform();
    double r = std::sqrt(r2);
    return {r * std::cos(phi), r * std::sin(phi), std::sqrt(1 - r2)};
}

Vec3 sample_uniform_hemisphere(RngStream& rng)
{
    double mu = 1 - rng.uniform();
    double phi = 2 * pi * rng.uniform();
    double s = std::sqrt(std::fmax(0.0, 1 - mu * mu));
    return {s * std::cos(phi), s * std::sin(phi), mu};
}

//---------------------------------------------------------------------------//
Ray sample_incident(Footprint const& footprint, RngStream& rng)
{
    double u0 = rng.uniform();
    double u1 = rng.uniform();
    double u2 = rng.uniform();
    Vec2 xy = footprint.sample(u0, u1, u2);
    Vec3 dir = sample_cosine_hemisphere(rng);
    dir.z = -dir.z;
    return {{xy.x, xy.y, 0}, dir};
}

Ray sample_incident(Geometry const& geo, RngStream& rng)
{
    return sample_incident(geo.footprint(), rng);
}

//---------------------------------------------------------------------------//
Vec3 to_world_frame(Vec3 const& local, Vec3 const& n)
{
    // Duff et al., "Building an orthonormal basis, revisited" (JCGT 2017)
    double sign = std::copysign(1.0, n.z);
    double a = -1 / (sign + n.z);
    double b = n.x * n.y * a;
    Vec3 t1{1 + sign * n.x * n.x * a, sign * b, -sign * n.x};
    Vec3 t2{b, sign + n.y * n.y * a, -n.y};
    return local.x * t1 + local.y * t2 + local.z * n;
}

//---------------------------------------------------------------------------//
Vec3 sample_emission(Vec3 const& normal, EmissionModel model, RngStream& rng)
{
    while (true)
    {
        Vec3 local = (model == EmissionModel::cosine_law)
                         ? sample_cosine_hemisphere(rng)
                         : sample_uniform_hemisphere(rng);
        Vec3 dir = normalized(to_world_frame(local, normal));
        if (dot(dir, normal) > 0)
            return dir;
    }
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
