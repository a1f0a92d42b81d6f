//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file oracles/MeshOracle.hh
//! \brief Brute-force triangle soup intersection
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "getterflow/Types.hh"
#include "getterflow/geometry/Triangle.hh"

namespace getterflow::test
{
//---------------------------------------------------------------------------//
/*!
 * Test every triangle for every ray, plus the top plane z = 0.
 *
 * Only triangles facing the ray count, matching the one-sided surfaces of
 * the library geometries.
 */
class MeshOracle
{
  public:
    explicit MeshOracle(std::vector<Triangle> triangles) : tris_(std::move(triangles)) {}

    std::optional<Hit> intersect(Ray const& ray) const
    {
        std::optional<Hit> best;
        Vec3 const& o = ray.origin;
        Vec3 const& d = ray.direction;
        for (auto const& tri : tris_)
        {
            if (dot(d, tri.normal) >= 0)
                continue;
            // Plane distance, then inside test by same-side edge products
            double t = dot(tri.a - o, tri.normal) / dot(d, tri.normal);
            if (t < -1e-12)
                continue;
            Vec3 x = o + t * d;
            double eps = 1e-10 * (norm(tri.b - tri.a) + norm(tri.c - tri.a));
            auto edge = [&](Vec3 const& p, Vec3 const& q) {
                return dot(cross(q - p, x - p), tri.normal);
            };
            if (edge(tri.a, tri.b) < -eps || edge(tri.b, tri.c) < -eps
                || edge(tri.c, tri.a) < -eps)
            {
                continue;
            }
            t = std::max(t, 0.0);
            if (!best || t < best->distance)
                best = Hit{Hit::Kind::facet, t, x, tri.normal};
        }
        if (d.z > 0)
        {
            double t = -o.z / d.z;
            if (!best || t < best->distance)
                best = Hit{Hit::Kind::top_plane_exit, std::max(t, 0.0), o + t * d, {}};
        }
        return best;
    }

    std::size_t size() const { return tris_.size(); }

  private:
    std::vector<Triangle> tris_;
};

//---------------------------------------------------------------------------//
}  // namespace getterflow::test
