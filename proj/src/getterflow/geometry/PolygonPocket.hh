//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/PolygonPocket.hh
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
 * Parameters of a tapered regular-polygon pocket.
 *
 * The flanks make angle \c theta_deg with the top-plane normal. The
 * untruncated (apex) depth is h = apothem / tan(theta); a truncation ratio
 * t/h removes the bottom t of that apex, leaving a flat floor at depth
 * h (1 - t/h).
 */
struct PolygonPocketSpec
{
    int sides{6};
    double top_side_length{1};  //!< [mm]
    double theta_deg{10};
    double truncation_ratio{0};

    void validate() const;
    double apothem() const;
    //! Untruncated apex depth (zero at theta = 90)
    double apex_depth() const;
    //! Realized depth of the truncated pocket
    double depth() const;
};

//---------------------------------------------------------------------------//
/*!
 * Single closed inverted pyramid (optionally truncated).
 *
 * The pocket interior is convex, so the next boundary crossing is the
 * nearest face plane approached from inside; no triangle tests are needed.
 */
class PolygonPocket
{
  public:
    explicit PolygonPocket(PolygonPocketSpec const& spec);

    std::optional<Hit> intersect(Ray const& ray) const;

    PolygonPocketSpec const& spec() const { return spec_; }
    Footprint const& footprint() const { return footprint_; }
    double diameter() const { return diameter_; }
    std::vector<Triangle> triangles() const;

  private:
    struct Plane
    {
        Vec3 normal;  //!< Unit normal into the pocket
        double offset;  //!< normal . x == offset on the plane
    };

    PolygonPocketSpec spec_;
    Footprint footprint_;
    std::vector<Plane> planes_;
    double diameter_;
};

//---------------------------------------------------------------------------//
}  // namespace getterflow
