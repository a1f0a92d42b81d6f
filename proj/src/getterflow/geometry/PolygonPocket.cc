//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/PolygonPocket.cc
//---------------------------------------------------------------------------//
#include "PolygonPocket.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "getterflow/Error.hh"
#include "FlatSurface.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
void PolygonPocketSpec::validate() const
{
    GF_VALIDATE(sides >= 3, "polygon pocket needs at least 3 sides");
    GF_VALIDATE(sides <= 64, "polygon pocket side count is unreasonably large");
    GF_VALIDATE(std::isfinite(top_side_length) && top_side_length > 0,
                "polygon side length must be positive");
    GF_VALIDATE(theta_deg > 0 && theta_deg <= 90,
                "surface angle must lie in (0, 90] degrees");
    GF_VALIDATE(truncation_ratio >= 0 && truncation_ratio < 1,
                "truncation ratio must lie in [0, 1)");
}

double PolygonPocketSpec::apothem() const
{
    return polygon_apothem(sides, top_side_length);
}

double PolygonPocketSpec::apex_depth() const
{
    if (theta_deg >= 90)
        return 0;
    return this->apothem() / std::tan(deg_to_rad(theta_deg));
}

double PolygonPocketSpec::depth() const
{
    return this->apex_depth() * (1 - truncation_ratio);
}

//---------------------------------------------------------------------------//
PolygonPocket::PolygonPocket(PolygonPocketSpec const& spec)
    : spec_(spec)
    , footprint_(Footprint::polygon(regular_polygon(spec.sides, spec.top_side_length)))
{
    spec_.validate();
    GF_VALIDATE(spec_.theta_deg < 90, "a 90 degree pocket is flat");

    double theta = deg_to_rad(spec_.theta_deg);
    double apothem = spec_.apothem();
    double c = std::cos(theta);
    double s = std::sin(theta);
    // Flank k: u_k . xy - tan(theta) z <= apothem inside the pocket
    for (int k = 0; k < spec_.sides; ++k)
    {
        Vec2 u = polygon_edge_normal(spec_.sides, k);
        planes_.push_back({{-u.x * c, -u.y * c, s}, -apothem * c});
    }
    if (spec_.truncation_ratio > 0)
    {
        planes_.push_back({{0, 0, 1}, -spec_.depth()});
    }
    diameter_ = std::max(footprint_diameter(footprint_), spec_.depth());
}

//---------------------------------------------------------------------------//
std::optional<Hit> PolygonPocket::intersect(Ray const& ray) const
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    Vec3 const& o = ray.origin;
    Vec3 const& d = ray.direction;

    double t_top = inf;
    if (d.z > 0)
    {
        t_top = std::max(0.0, -o.z / d.z);
    }

    double t_face = inf;
    Plane const* face = nullptr;
    for (auto const& plane : planes_)
    {
        double approach = dot(plane.normal, d);
        if (approach >= 0)
            continue;
        double t = std::max(0.0, (plane.offset - dot(plane.normal, o)) / approach);
        if (t < t_face)
        {
            t_face = t;
            face = &plane;
        }
    }

    Hit hit;
    if (t_top <= t_face)
    {
        if (t_top == inf)
            return std::nullopt;
        hit.kind = Hit::Kind::top_plane_exit;
        hit.distance = t_top;
        hit.point = ray.at(t_top);
        return hit;
    }
    hit.kind = Hit::Kind::facet;
    hit.distance = t_face;
    hit.point = ray.at(t_face);
    hit.normal = face->normal;
    return hit;
}

//---------------------------------------------------------------------------//
std::vector<Triangle> PolygonPocket::triangles() const
{
    auto mouth = footprint_.vertices();
    double depth = spec_.depth();
    double r = spec_.truncation_ratio;
    std::vector<Triangle> result;
    int n = spec_.sides;
    for (int k = 0; k < n; ++k)
    {
        Vec2 m0 = mouth[k];
        Vec2 m1 = mouth[(k + 1) % n];
        Vec3 top0{m0.x, m0.y, 0};
        Vec3 top1{m1.x, m1.y, 0};
        if (r > 0)
        {
            Vec3 bot0{r * m0.x, r * m0.y, -depth};
            Vec3 bot1{r * m1.x, r * m1.y, -depth};
            result.push_back(make_triangle(top0, bot1, bot0));
            result.push_back(make_triangle(top0, top1, bot1));
        }
        else
        {
            result.push_back(make_triangle(top0, top1, {0, 0, -depth}));
        }
    }
    if (r > 0)
    {
        Vec3 b0{r * mouth[0].x, r * mouth[0].y, -depth};
        for (int k = 1; k + 1 < n; ++k)
        {
            result.push_back(make_triangle(
                b0,
                {r * mouth[k].x, r * mouth[k].y, -depth},
                {r * mouth[k + 1].x, r * mouth[k + 1].y, -depth}));
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
