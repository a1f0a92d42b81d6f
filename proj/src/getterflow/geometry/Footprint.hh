//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/Footprint.hh
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "getterflow/Types.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
/*!
 * Region of the top plane through which incident particles enter one cell.
 *
 * Either a convex polygon (closed pockets) or a parallelogram spanned by two
 * lattice vectors (periodic cells). Sampling maps three uniform deviates to a
 * uniformly distributed point; the first deviate is unused for
 * parallelograms so that every footprint consumes the same number of draws.
 */
class Footprint
{
  public:
    //! Convex polygon with counterclockwise vertices
    static Footprint polygon(std::vector<Vec2> ccw_vertices);
    //! Parallelogram corner + s a1 + t a2 for s, t in [0, 1)
    static Footprint parallelogram(Vec2 corner, Vec2 a1, Vec2 a2);

    double area() const { return area_; }
    Vec2 sample(double u0, double u1, double u2) const;
    bool contains(Vec2 p, double tol = 0) const;

    //! Polygon vertices (parallelograms report their four corners)
    std::vector<Vec2> const& vertices() const { return vertices_; }
    bool is_parallelogram() const { return parallelogram_; }

  private:
    std::vector<Vec2> vertices_;
    std::vector<double> cumulative_area_;  // fan triangles from vertex 0
    double area_{0};
    bool parallelogram_{false};
};

//---------------------------------------------------------------------------//
/*!
 * Regular polygon centered on the origin with one edge normal along +x.
 *
 * Vertex k sits at polar angle (2k - 1) pi / sides, so edge k (from vertex k
 * to k+1) has outward normal at angle 2 k pi / sides.
 */
std::vector<Vec2> regular_polygon(int sides, double side_length);

//! Distance from center to edge midpoint of a regular polygon
double polygon_apothem(int sides, double side_length);

//! Outward unit normal of edge k of the regular polygon above
Vec2 polygon_edge_normal(int sides, int k);

//---------------------------------------------------------------------------//
}  // namespace getterflow
