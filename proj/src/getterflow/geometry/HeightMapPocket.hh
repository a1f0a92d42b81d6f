//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/HeightMapPocket.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "Footprint.hh"
#include "HeightMap.hh"
#include "Triangle.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
/*!
 * Triangulated height-map pocket inside a hexagonal outline.
 *
 * Each grid square is split into two triangles along its (i, j)-(i+1, j+1)
 * diagonal. The mouth is closed laterally by the vertical hexagonal prism of
 * the outline; the mesh beyond the outline is never reached from inside
 * because the prism is crossed first.
 *
 * Rays are marched through the grid with a 2-D DDA, skipping cells whose
 * highest node lies below the ray segment.
 */
class HeightMapPocket
{
  public:
    explicit HeightMapPocket(HeightMap map);

    std::optional<Hit> intersect(Ray const& ray) const;

    HeightMap const& map() const { return map_; }
    Footprint const& footprint() const { return footprint_; }
    double diameter() const { return diameter_; }
    //! Mesh triangles with a centroid inside the outline plus the walls
    std::vector<Triangle> triangles() const;

  private:
    HeightMap map_;
    Footprint footprint_;
    std::array<Vec2, 6> wall_normals_;  // outward
    double apothem_;
    double lowest_;
    double diameter_;
    double x0_;
    double y0_;
    std::vector<double> z_;  // scaled heights
    std::vector<double> cell_top_;  // per-cell max node height

    Vec3 node(std::size_t i, std::size_t j) const
    {
        return {x0_ + static_cast<double>(i) * map_.cell_pitch,
                y0_ + static_cast<double>(j) * map_.cell_pitch,
                z_[j * map_.nx + i]};
    }

    std::optional<Hit> intersect_cell(std::size_t i,
                                      std::size_t j,
                                      Ray const& ray,
                                      double t_max) const;
};

//---------------------------------------------------------------------------//
}  // namespace getterflow
