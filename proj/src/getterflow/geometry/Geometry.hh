//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/Geometry.hh
//! \brief Unit-cell surface builders and the shared geometry handle
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ConeArray.hh"
#include "FlatSurface.hh"
#include "HeightMapPocket.hh"
#include "PolygonPocket.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
enum class LateralRule
{
    closed_walls,
    periodic_cell,
};

//---------------------------------------------------------------------------//
/*!
 * Immutable, cheaply copyable handle to a unit-cell surface.
 *
 * The top plane is always z = 0 and all surface lies at or below it.
 * Queries are const and reentrant, so one geometry may be shared by any
 * number of tracing threads.
 */
class Geometry
{
  public:
    using Shape = std::variant<FlatSurface, PolygonPocket, ConeArray, HeightMapPocket>;

    explicit Geometry(Shape shape);

    //! Nearest surface or top-plane event; nullopt signals a geometry leak
    std::optional<Hit> intersect(Ray const& ray) const;

    Footprint const& footprint() const;
    LateralRule lateral_rule() const;
    //! Lattice vectors for periodic cells
    std::optional<std::array<Vec2, 2>> lattice_vectors() const;
    //! Intersection/emission tolerance (1e-9 of the cell diameter)
    double tolerance() const { return tolerance_; }
    bool is_flat() const;

    //! JSON description of the construction parameters
    nlohmann::json descriptor() const;
    //! Triangulated surface for debugging export
    std::vector<Triangle> triangles() const;

    Shape const& shape() const { return *shape_; }

  private:
    std::shared_ptr<Shape const> shape_;
    double tolerance_;
};

//---------------------------------------------------------------------------//
// BUILDERS
//---------------------------------------------------------------------------//

//! Closed polygonal pocket; theta = 90 returns the flat mouth polygon
Geometry build_polygon_pocket(PolygonPocketSpec const& spec);

//! One periodic cell of a cone array; theta = 90 returns a flat cell
Geometry build_cone_array(ConeArraySpec const& spec);

//! Closed height-map pocket
Geometry build_heightmap(HeightMap map);

//! Flat unit square (periodic)
Geometry build_flat();

//---------------------------------------------------------------------------//
//! Intersect with a bare shape (used by tests and the tiled oracle)
template<class S>
concept Intersectable = requires(S const& s, Ray const& r) {
    { s.intersect(r) } -> std::same_as<std::optional<Hit>>;
};

//---------------------------------------------------------------------------//
}  // namespace getterflow
