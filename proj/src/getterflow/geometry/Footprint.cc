//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/Footprint.cc
//---------------------------------------------------------------------------//
#include "Footprint.hh"

#include <algorithm>
#include <cmath>

#include "getterflow/Error.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
Footprint Footprint::polygon(std::vector<Vec2> ccw_vertices)
{
    GF_VALIDATE(ccw_vertices.size() >= 3, "footprint polygon needs >= 3 vertices");
    Footprint result;
    result.vertices_ = std::move(ccw_vertices);
    auto const& v = result.vertices_;
    double total = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
    {
        double a = 0.5 * cross(v[i] - v[0], v[i + 1] - v[0]);
        GF_VALIDATE(a > 0, "footprint polygon must be convex and counterclockwise");
        total += a;
        result.cumulative_area_.push_back(total);
    }
    result.area_ = total;
    return result;
}

//---------------------------------------------------------------------------//
Footprint Footprint::parallelogram(Vec2 corner, Vec2 a1, Vec2 a2)
{
    Footprint result;
    result.parallelogram_ = true;
    result.area_ = std::fabs(cross(a1, a2));
    GF_VALIDATE(result.area_ > 0, "degenerate lattice vectors");
    result.vertices_ = {corner, corner + a1, corner + a1 + a2, corner + a2};
    if (cross(a1, a2) < 0)
    {
        std::reverse(result.vertices_.begin(), result.vertices_.end());
    }
    return result;
}

//---------------------------------------------------------------------------//
Vec2 Footprint::sample(double u0, double u1, double u2) const
{
    if (parallelogram_)
    {
        auto const& v = vertices_;
        // Corner ordering may have been reversed; recover the spanning edges
        Vec2 e1 = v[1] - v[0];
        Vec2 e2 = v[3] - v[0];
        return v[0] + u1 * e1 + u2 * e2;
    }

    double target = u0 * area_;
    auto iter = std::upper_bound(
        cumulative_area_.begin(), cumulative_area_.end(), target);
    std::size_t tri = std::min<std::size_t>(
        iter - cumulative_area_.begin(), cumulative_area_.size() - 1);

    Vec2 const& a = vertices_[0];
    Vec2 const& b = vertices_[tri + 1];
    Vec2 const& c = vertices_[tri + 2];
    double s = std::sqrt(u1);
    return (1 - s) * a + (s * (1 - u2)) * b + (s * u2) * c;
}

//---------------------------------------------------------------------------//
bool Footprint::contains(Vec2 p, double tol) const
{
    std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        Vec2 const& a = vertices_[i];
        Vec2 const& b = vertices_[(i + 1) % n];
        Vec2 edge = b - a;
        double len = std::hypot(edge.x, edge.y);
        if (cross(edge, p - a) / len < -tol)
            return false;
    }
    return true;
}

//---------------------------------------------------------------------------//
std::vector<Vec2> regular_polygon(int sides, double side_length)
{
    double circumradius = side_length / (2 * std::sin(pi / sides));
    std::vector<Vec2> result;
    result.reserve(sides);
    for (int k = 0; k < sides; ++k)
    {
        double phi = (2 * k - 1) * pi / sides;
        result.push_back({circumradius * std::cos(phi), circumradius * std::sin(phi)});
    }
    return result;
}

double polygon_apothem(int sides, double side_length)
{
    return side_length / (2 * std::tan(pi / sides));
}

Vec2 polygon_edge_normal(int sides, int k)
{
    double phi = 2 * k * pi / sides;
    return {std::cos(phi), std::sin(phi)};
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
