//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/FlatSurface.cc
//---------------------------------------------------------------------------//
#include "FlatSurface.hh"

#include <algorithm>
#include <cmath>

namespace getterflow
{
//---------------------------------------------------------------------------//
double footprint_diameter(Footprint const& fp)
{
    double result = 0;
    auto const& v = fp.vertices();
    for (auto const& p : v)
    {
        for (auto const& q : v)
        {
            result = std::max(result, std::hypot(p.x - q.x, p.y - q.y));
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
FlatSurface::FlatSurface(Footprint footprint)
    : footprint_(std::move(footprint)), diameter_(footprint_diameter(footprint_))
{
}

//---------------------------------------------------------------------------//
std::optional<Hit> FlatSurface::intersect(Ray const& ray) const
{
    double dz = ray.direction.z;
    if (dz == 0)
        return std::nullopt;

    double t = std::max(0.0, -ray.origin.z / dz);
    Hit hit;
    hit.distance = t;
    hit.point = ray.at(t);
    hit.point.z = 0;
    if (dz > 0)
    {
        hit.kind = Hit::Kind::top_plane_exit;
    }
    else
    {
        hit.kind = Hit::Kind::facet;
        hit.normal = {0, 0, 1};
    }
    return hit;
}

//---------------------------------------------------------------------------//
std::vector<Triangle> FlatSurface::triangles() const
{
    std::vector<Triangle> result;
    auto const& v = footprint_.vertices();
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
    {
        result.push_back(make_triangle({v[0].x, v[0].y, 0},
                                       {v[i].x, v[i].y, 0},
                                       {v[i + 1].x, v[i + 1].y, 0}));
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
