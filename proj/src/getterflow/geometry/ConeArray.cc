//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/ConeArray.cc
//---------------------------------------------------------------------------//
#include "ConeArray.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "getterflow/Error.hh"
#include "FlatSurface.hh"

namespace getterflow
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();
}  // namespace

//---------------------------------------------------------------------------//
void ConeArraySpec::validate() const
{
    GF_VALIDATE(std::isfinite(pitch) && pitch > 0, "cone pitch must be positive");
    GF_VALIDATE(std::isfinite(base_radius) && base_radius > 0,
                "cone base radius must be positive");
    GF_VALIDATE(base_radius <= pitch / 2,
                "cone base radius exceeds half the pitch (cones would overlap)");
    GF_VALIDATE(theta_deg > 0 && theta_deg <= 90,
                "surface angle must lie in (0, 90] degrees");
    GF_VALIDATE(truncation_ratio >= 0 && truncation_ratio < 1,
                "truncation ratio must lie in [0, 1)");
}

double ConeArraySpec::apex_height() const
{
    if (theta_deg >= 90)
        return 0;
    return base_radius / std::tan(deg_to_rad(theta_deg));
}

double ConeArraySpec::height() const
{
    return this->apex_height() * (1 - truncation_ratio);
}

//---------------------------------------------------------------------------//
ConeArray::ConeArray(ConeArraySpec const& spec)
    : spec_(spec)
    , footprint_(Footprint::parallelogram(
          {-0.75 * spec.pitch, -0.25 * std::sqrt(3.0) * spec.pitch},
          {spec.pitch, 0},
          {0.5 * spec.pitch, 0.5 * std::sqrt(3.0) * spec.pitch}))
{
    spec_.validate();
    GF_VALIDATE(spec_.theta_deg < 90, "a 90 degree cone array is flat");

    for (int j = 0; j < 6; ++j)
    {
        double phi = j * pi / 3;
        side_normals_[j] = {std::cos(phi), std::sin(phi)};
    }
    half_pitch_ = spec_.pitch / 2;
    height_ = spec_.height();
    apex_z_ = spec_.apex_height() - height_;
    double slope = std::tan(deg_to_rad(spec_.theta_deg));
    slope_sq_ = slope * slope;
    tip_radius_ = spec_.base_radius * spec_.truncation_ratio;
    diameter_ = std::max(2 * spec_.pitch / std::sqrt(3.0), height_);
}

//---------------------------------------------------------------------------//
std::array<Vec2, 2> ConeArray::lattice_vectors() const
{
    return {Vec2{spec_.pitch, 0},
            Vec2{0.5 * spec_.pitch, 0.5 * std::sqrt(3.0) * spec_.pitch}};
}

//---------------------------------------------------------------------------//
Vec3 ConeArray::wrap_into_cell(Vec3 p) const
{
    for (int iter = 0; iter < 64; ++iter)
    {
        int worst = -1;
        double excess = 0;
        for (int j = 0; j < 6; ++j)
        {
            double e = p.x * side_normals_[j].x + p.y * side_normals_[j].y
                       - half_pitch_;
            if (e > excess)
            {
                excess = e;
                worst = j;
            }
        }
        if (worst < 0)
            break;
        p.x -= spec_.pitch * side_normals_[worst].x;
        p.y -= spec_.pitch * side_normals_[worst].y;
    }
    return p;
}

//---------------------------------------------------------------------------//
std::optional<Hit> ConeArray::local_event(Vec3 const& o, Vec3 const& d) const
{
    Hit best;
    best.distance = inf;

    auto consider = [&](Hit::Kind kind, double t, Vec3 const& normal) {
        if (t < best.distance)
        {
            best.kind = kind;
            best.distance = t;
            best.normal = normal;
        }
    };

    if (d.z > 0)
    {
        consider(Hit::Kind::top_plane_exit, std::max(0.0, -o.z / d.z), {});
    }
    else if (d.z < 0)
    {
        // Base plane; any point under a cone is shadowed by the flank
        consider(Hit::Kind::facet, std::max(0.0, (-height_ - o.z) / d.z), {0, 0, 1});
        if (tip_radius_ > 0)
        {
            double t = std::max(0.0, -o.z / d.z);
            double x = o.x + t * d.x;
            double y = o.y + t * d.y;
            if (x * x + y * y <= tip_radius_ * tip_radius_)
                consider(Hit::Kind::facet, t, {0, 0, 1});
        }
    }

    // Lateral surface: x^2 + y^2 = tan^2(theta) (z_apex - z)^2
    double w = apex_z_ - o.z;
    double a = d.x * d.x + d.y * d.y - slope_sq_ * d.z * d.z;
    double b = 2 * (o.x * d.x + o.y * d.y + slope_sq_ * w * d.z);
    double c = o.x * o.x + o.y * o.y - slope_sq_ * w * w;

    double roots[2] = {inf, inf};
    if (std::fabs(a) > 1e-14 * (std::fabs(b) + std::fabs(c) + 1e-300))
    {
        double disc = b * b - 4 * a * c;
        if (disc >= 0)
        {
            double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
            roots[0] = q / a;
            roots[1] = (q != 0) ? c / q : inf;
        }
    }
    else if (b != 0)
    {
        roots[0] = -c / b;
    }

    double const tol = 1e-9 * diameter_;
    for (double t : roots)
    {
        if (!(t >= -tol) || t == inf)
            continue;
        t = std::max(0.0, t);
        Vec3 p = o + t * d;
        if (p.z < -height_ - tol || p.z > tol)
            continue;
        Vec3 grad{p.x, p.y, slope_sq_ * (apex_z_ - p.z)};
        if (dot(grad, d) >= 0)
            continue;
        consider(Hit::Kind::facet, t, normalized(grad));
    }

    if (best.distance == inf)
        return std::nullopt;
    return best;
}

//---------------------------------------------------------------------------//
std::optional<Hit> ConeArray::intersect(Ray const& ray) const
{
    Vec3 o = this->wrap_into_cell(ray.origin);
    Vec3 const& d = ray.direction;
    double travelled = 0;

    for (int wraps = 0; wraps < max_wraps; ++wraps)
    {
        auto event = this->local_event(o, d);

        double t_side = inf;
        int side = -1;
        for (int j = 0; j < 6; ++j)
        {
            double rate = d.x * side_normals_[j].x + d.y * side_normals_[j].y;
            if (rate <= 0)
                continue;
            double t = (half_pitch_
                        - (o.x * side_normals_[j].x + o.y * side_normals_[j].y))
                       / rate;
            t = std::max(0.0, t);
            if (t < t_side)
            {
                t_side = t;
                side = j;
            }
        }

        if (event && event->distance <= t_side)
        {
            event->point = o + event->distance * d;
            event->distance += travelled;
            return event;
        }
        if (side < 0)
            return std::nullopt;

        o += t_side * d;
        o.x -= spec_.pitch * side_normals_[side].x;
        o.y -= spec_.pitch * side_normals_[side].y;
        travelled += t_side;
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
std::vector<Triangle> ConeArray::triangles(int segments) const
{
    std::vector<Triangle> result;
    double base_z = -height_;
    double rb = spec_.base_radius;
    double rt = tip_radius_;
    for (int k = 0; k < segments; ++k)
    {
        double p0 = 2 * pi * k / segments;
        double p1 = 2 * pi * (k + 1) / segments;
        Vec3 b0{rb * std::cos(p0), rb * std::sin(p0), base_z};
        Vec3 b1{rb * std::cos(p1), rb * std::sin(p1), base_z};
        if (rt > 0)
        {
            Vec3 t0{rt * std::cos(p0), rt * std::sin(p0), 0};
            Vec3 t1{rt * std::cos(p1), rt * std::sin(p1), 0};
            result.push_back(make_triangle(b0, b1, t1));
            result.push_back(make_triangle(b0, t1, t0));
            result.push_back(make_triangle({0, 0, 0}, t0, t1));
        }
        else
        {
            result.push_back(make_triangle(b0, b1, {0, 0, 0}));
        }
    }
    // Base plane over the primitive cell (the cone footprint overlaps it)
    auto const& v = footprint_.vertices();
    result.push_back(make_triangle({v[0].x, v[0].y, base_z},
                                   {v[1].x, v[1].y, base_z},
                                   {v[2].x, v[2].y, base_z}));
    result.push_back(make_triangle({v[0].x, v[0].y, base_z},
                                   {v[2].x, v[2].y, base_z},
                                   {v[3].x, v[3].y, base_z}));
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
