//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/ConeArray.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "Footprint.hh"
#include "Triangle.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
/*!
 * Hexagonally packed array of conical protrusions on a flat base.
 *
 * The cone half-angle equals the surface angle (flanks measured from the
 * top-plane normal). Full cone height is base_radius / tan(theta); the
 * truncation ratio removes that fraction of the height from the tip.
 */
struct ConeArraySpec
{
    double pitch{1};  //!< Center-to-center spacing [mm]
    double theta_deg{10};
    double truncation_ratio{0};
    double base_radius{0.5};  //!< [mm]

    void validate() const;
    double apex_height() const;
    //! Height of the (possibly truncated) cone above the base plane
    double height() const;
};

//---------------------------------------------------------------------------//
/*!
 * One periodic cell of a cone array with the top plane through the tips.
 *
 * The base plane is at z = -height and the top plane at z = 0. Tracing is
 * done in the hexagonal Wigner-Seitz cell around the cone; the cone fits
 * inside it because base_radius <= pitch / 2. Crossing a cell side
 * re-enters through the opposite side, so callers see an unbounded surface.
 * Incident particles are sampled over the rhombic primitive cell.
 */
class ConeArray
{
  public:
    explicit ConeArray(ConeArraySpec const& spec);

    std::optional<Hit> intersect(Ray const& ray) const;

    ConeArraySpec const& spec() const { return spec_; }
    Footprint const& footprint() const { return footprint_; }
    double diameter() const { return diameter_; }
    std::array<Vec2, 2> lattice_vectors() const;
    std::vector<Triangle> triangles(int segments = 64) const;

    //! Translate a point into the Wigner-Seitz cell around the origin
    Vec3 wrap_into_cell(Vec3 p) const;

    //! Bound on periodic-boundary crossings per query
    static constexpr int max_wraps = 1'000'000;

  private:
    ConeArraySpec spec_;
    Footprint footprint_;
    std::array<Vec2, 6> side_normals_;
    double half_pitch_;
    double height_;
    double apex_z_;
    double slope_sq_;  // tan^2 theta
    double tip_radius_;
    double diameter_;

    //! Nearest cone/base/tip event within the current cell
    std::optional<Hit> local_event(Vec3 const& o, Vec3 const& d) const;
};

//---------------------------------------------------------------------------//
}  // namespace getterflow
