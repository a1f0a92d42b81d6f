//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/HeightMap.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <vector>

namespace getterflow
{
struct PolygonPocketSpec;

//---------------------------------------------------------------------------//
/*!
 * Recessed pocket sampled on a regular grid.
 *
 * Heights are in mm relative to the top plane (all <= 0) and are multiplied
 * by \c depth_scale when the geometry is built. Node (i, j) sits at
 * x = (i - (nx - 1) / 2) * cell_pitch, y = (j - (ny - 1) / 2) * cell_pitch,
 * i.e. the grid is centered on the pocket axis. Storage is row-major with
 * x varying fastest.
 */
struct HeightMap
{
    std::size_t nx{0};
    std::size_t ny{0};
    std::vector<double> heights;
    double cell_pitch{1};  //!< [mm]
    double outline_side{1};  //!< Side of the hexagonal outline [mm]
    double depth_scale{1};

    double at(std::size_t i, std::size_t j) const { return heights[j * nx + i]; }
    double x(std::size_t i) const;
    double y(std::size_t j) const;

    //! Deepest point after scaling (a non-negative number)
    double max_depth() const;

    void validate() const;
};

//---------------------------------------------------------------------------//
/*!
 * Rescale depth so that outline_side / max_depth equals the given ratio.
 *
 * Lateral dimensions are unchanged. A map with no depth is returned as is.
 */
HeightMap stretch_heightmap(HeightMap map, double side_to_depth);

//---------------------------------------------------------------------------//
/*!
 * Sample a hexagonal polygon pocket onto a grid.
 *
 * The grid covers the hexagonal mouth plus one cell of margin; nodes outside
 * the mouth are at height zero.
 */
HeightMap rasterize_polygon_pocket(PolygonPocketSpec const& spec, double cell_pitch);

//---------------------------------------------------------------------------//
}  // namespace getterflow
