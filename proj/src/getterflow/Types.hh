//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/Types.hh
//! \brief Small value types shared by all modules
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <numbers>

namespace getterflow
{
//---------------------------------------------------------------------------//
//! Cartesian 3-vector in mm
struct Vec3
{
    double x{0};
    double y{0};
    double z{0};

    constexpr Vec3& operator+=(Vec3 const& o)
    {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(Vec3 const& o)
    {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double s)
    {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
    friend constexpr bool operator==(Vec3 const&, Vec3 const&) = default;
};

constexpr Vec3 operator+(Vec3 a, Vec3 const& b)
{
    return a += b;
}
constexpr Vec3 operator-(Vec3 a, Vec3 const& b)
{
    return a -= b;
}
constexpr Vec3 operator-(Vec3 const& a)
{
    return {-a.x, -a.y, -a.z};
}
constexpr Vec3 operator*(double s, Vec3 a)
{
    return a *= s;
}
constexpr Vec3 operator*(Vec3 a, double s)
{
    return a *= s;
}
constexpr double dot(Vec3 const& a, Vec3 const& b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vec3 cross(Vec3 const& a, Vec3 const& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 const& a)
{
    return std::sqrt(dot(a, a));
}
inline Vec3 normalized(Vec3 const& a)
{
    return a * (1.0 / norm(a));
}

//---------------------------------------------------------------------------//
//! Point in the top plane (lateral coordinates)
struct Vec2
{
    double x{0};
    double y{0};
    friend constexpr bool operator==(Vec2 const&, Vec2 const&) = default;
};

constexpr Vec2 operator+(Vec2 const& a, Vec2 const& b)
{
    return {a.x + b.x, a.y + b.y};
}
constexpr Vec2 operator-(Vec2 const& a, Vec2 const& b)
{
    return {a.x - b.x, a.y - b.y};
}
constexpr Vec2 operator*(double s, Vec2 const& a)
{
    return {s * a.x, s * a.y};
}
constexpr double dot(Vec2 const& a, Vec2 const& b)
{
    return a.x * b.x + a.y * b.y;
}
constexpr double cross(Vec2 const& a, Vec2 const& b)
{
    return a.x * b.y - a.y * b.x;
}

//---------------------------------------------------------------------------//
/*!
 * Straight-line particle trajectory.
 *
 * The direction must be a unit vector (within 1e-12).
 */
struct Ray
{
    Vec3 origin;
    Vec3 direction;

    Vec3 at(double t) const { return origin + t * direction; }
};

//---------------------------------------------------------------------------//
/*!
 * Result of a successful intersection query.
 *
 * For facet hits the normal is the unit surface normal pointing into the gas
 * region. Top-plane exits carry the crossing point and a zero normal.
 */
struct Hit
{
    enum class Kind
    {
        facet,
        top_plane_exit,
    };

    Kind kind{Kind::facet};
    double distance{0};
    Vec3 point;
    Vec3 normal;
};

//---------------------------------------------------------------------------//
//! Emission model for diffuse re-emission from a surface
enum class EmissionModel
{
    cosine_law,
    isotropic_half_space,
};

char const* to_cstring(EmissionModel m);
EmissionModel emission_model_from_string(char const* s);

//---------------------------------------------------------------------------//
inline constexpr double pi = std::numbers::pi;

constexpr double deg_to_rad(double deg)
{
    return deg * (pi / 180);
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
