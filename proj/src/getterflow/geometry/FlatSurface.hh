//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/FlatSurface.hh
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <vector>

#include "Footprint.hh"
#include "Triangle.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
/*!
 * Unstructured surface coincident with the top plane z = 0.
 *
 * Every builder degenerates to this shape at a surface angle of 90 degrees.
 */
class FlatSurface
{
  public:
    explicit FlatSurface(Footprint footprint);

    std::optional<Hit> intersect(Ray const& ray) const;

    Footprint const& footprint() const { return footprint_; }
    double diameter() const { return diameter_; }
    std::vector<Triangle> triangles() const;

  private:
    Footprint footprint_;
    double diameter_;
};

//---------------------------------------------------------------------------//
//! Largest vertex-to-vertex distance of a footprint
double footprint_diameter(Footprint const& fp);

//---------------------------------------------------------------------------//
}  // namespace getterflow
