//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/HeightMap.cc
//---------------------------------------------------------------------------//
#include "HeightMap.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "getterflow/Error.hh"
#include "Footprint.hh"
#include "PolygonPocket.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
double HeightMap::x(std::size_t i) const
{
    return (static_cast<double>(i) - 0.5 * static_cast<double>(nx - 1)) * cell_pitch;
}

double HeightMap::y(std::size_t j) const
{
    return (static_cast<double>(j) - 0.5 * static_cast<double>(ny - 1)) * cell_pitch;
}

double HeightMap::max_depth() const
{
    double lowest = 0;
    for (double h : heights)
        lowest = std::min(lowest, h);
    return -lowest * depth_scale;
}

//---------------------------------------------------------------------------//
void HeightMap::validate() const
{
    GF_VALIDATE(nx >= 2 && ny >= 2, "height map must be at least 2x2");
    GF_VALIDATE(heights.size() == nx * ny, "height map size does not match its dimensions");
    GF_VALIDATE(std::isfinite(cell_pitch) && cell_pitch > 0,
                "height map cell pitch must be positive");
    GF_VALIDATE(std::isfinite(outline_side) && outline_side > 0,
                "height map outline side must be positive");
    GF_VALIDATE(std::isfinite(depth_scale) && depth_scale > 0,
                "height map depth scale must be positive");
    for (double h : heights)
    {
        GF_VALIDATE(std::isfinite(h), "height map contains a non-finite height");
        GF_VALIDATE(h <= 0, "height map heights must be <= 0 (pockets are recesses)");
    }
}

//---------------------------------------------------------------------------//
HeightMap stretch_heightmap(HeightMap map, double side_to_depth)
{
    GF_VALIDATE(std::isfinite(side_to_depth) && side_to_depth > 0,
                "side-to-depth ratio must be positive");
    double depth = map.max_depth();
    if (depth == 0)
        return map;
    double target_depth = map.outline_side / side_to_depth;
    map.depth_scale *= target_depth / depth;
    return map;
}

//---------------------------------------------------------------------------//
HeightMap rasterize_polygon_pocket(PolygonPocketSpec const& spec, double cell_pitch)
{
    spec.validate();
    GF_VALIDATE(spec.sides == 6, "height-map outlines are hexagonal");
    GF_VALIDATE(cell_pitch > 0, "cell pitch must be positive");

    double apothem = spec.apothem();
    double circumradius = spec.top_side_length / (2 * std::sin(pi / 6));
    double depth = spec.depth();
    double slope = (spec.theta_deg >= 90) ? 0 : 1 / std::tan(deg_to_rad(spec.theta_deg));

    HeightMap map;
    map.cell_pitch = cell_pitch;
    map.outline_side = spec.top_side_length;
    auto half_cells = [&](double extent) {
        return static_cast<std::size_t>(std::ceil(extent / cell_pitch)) + 1;
    };
    map.nx = 2 * half_cells(apothem) + 1;
    map.ny = 2 * half_cells(circumradius) + 1;
    map.heights.resize(map.nx * map.ny);

    for (std::size_t j = 0; j < map.ny; ++j)
    {
        for (std::size_t i = 0; i < map.nx; ++i)
        {
            Vec2 p{map.x(i), map.y(j)};
            double gauge = -std::numeric_limits<double>::infinity();
            for (int k = 0; k < 6; ++k)
                gauge = std::max(gauge, dot(polygon_edge_normal(6, k), p));
            double h = 0;
            if (gauge < apothem)
                h = -std::min((apothem - gauge) * slope, depth);
            map.heights[j * map.nx + i] = h;
        }
    }
    return map;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
