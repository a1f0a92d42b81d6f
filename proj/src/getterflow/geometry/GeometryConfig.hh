//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/GeometryConfig.hh
//! \brief JSON construction of geometries
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>

#include "json.hpp"

#include "ConeArray.hh"
#include "Geometry.hh"
#include "HeightMap.hh"
#include "PolygonPocket.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
// Each parser accepts only known keys and fills defaults for missing ones.

PolygonPocketSpec polygon_pocket_from_json(nlohmann::json const& j);
nlohmann::json to_json(PolygonPocketSpec const& spec);

ConeArraySpec cone_array_from_json(nlohmann::json const& j);
nlohmann::json to_json(ConeArraySpec const& spec);

/*!
 * Height-map source.
 *
 * Exactly one of \c csv, \c pgm (with \c sidecar) or \c rasterize (a
 * polygon-pocket object) is given. Relative paths resolve against the
 * configuration file's directory.
 */
HeightMap heightmap_from_json(nlohmann::json const& j,
                              std::filesystem::path const& base_dir = {});

struct GeometryConfig
{
    Geometry geometry;
    nlohmann::json resolved;  //!< Input with defaults filled in
};

//! Build from {"type": "flat" | "polygon_pocket" | "cone_array" | "heightmap", ...}
GeometryConfig geometry_from_json(nlohmann::json const& j,
                                  std::filesystem::path const& base_dir = {});

//! Reject keys outside the allowed set
void check_keys(nlohmann::json const& j,
                std::initializer_list<char const*> allowed,
                std::string const& context);

//---------------------------------------------------------------------------//
}  // namespace getterflow
