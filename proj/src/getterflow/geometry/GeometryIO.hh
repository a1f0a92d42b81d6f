//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/GeometryIO.hh
//! \brief Height-map ingestion and STL export
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "Geometry.hh"
#include "HeightMap.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
/*!
 * Lateral parameters that accompany a bare height grid.
 */
struct HeightMapFrame
{
    double cell_pitch{1};
    double outline_side{1};
    double depth_scale{1};
};

//---------------------------------------------------------------------------//
/*!
 * Read a CSV grid of heights in mm.
 *
 * Each line is one row of constant y (first line is the lowest y); commas,
 * semicolons or whitespace separate values. Blank lines and lines starting
 * with '#' are ignored.
 */
HeightMap read_heightmap_csv(std::istream& is, HeightMapFrame const& frame);
HeightMap read_heightmap_csv(std::filesystem::path const& path,
                             HeightMapFrame const& frame);

//---------------------------------------------------------------------------//
/*!
 * Read a binary (P5) PGM with a JSON sidecar.
 *
 * The sidecar provides \c cell_pitch, \c outline_side, optional
 * \c depth_scale, and the heights mapped to black (0) and white (maxval):
 * \c black_height and \c white_height. The first image row is the highest y,
 * as images are conventionally stored top-down.
 */
HeightMap read_heightmap_pgm(std::filesystem::path const& pgm_path,
                             std::filesystem::path const& sidecar_path);
HeightMap read_heightmap_pgm(std::istream& pgm, std::string const& sidecar_json);

//---------------------------------------------------------------------------//
//! Write the triangulated surface as ASCII STL
void write_stl(std::ostream& os, Geometry const& geo, std::string const& name = "getterflow");

//---------------------------------------------------------------------------//
}  // namespace getterflow
