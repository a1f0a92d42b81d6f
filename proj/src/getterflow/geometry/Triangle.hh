//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/Triangle.hh
//---------------------------------------------------------------------------//
#pragma once

#include "getterflow/Types.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
//! Planar triangle with its unit normal pointing into the gas region
struct Triangle
{
    Vec3 a;
    Vec3 b;
    Vec3 c;
    Vec3 normal;
};

//! Build a triangle whose normal follows the right-hand rule a -> b -> c
inline Triangle make_triangle(Vec3 const& a, Vec3 const& b, Vec3 const& c)
{
    return {a, b, c, normalized(cross(b - a, c - a))};
}

inline double area(Triangle const& t)
{
    return 0.5 * norm(cross(t.b - t.a, t.c - t.a));
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
