//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/sampler/Sampler.hh
//---------------------------------------------------------------------------//
#pragma once

#include "getterflow/Types.hh"
#include "RngStream.hh"

namespace getterflow
{
class Footprint;
class Geometry;

//---------------------------------------------------------------------------//
/*!
 * Incident particle entering a cell through the top plane.
 *
 * The origin is uniform over the footprint at z = 0 and the direction is
 * cosine-weighted about -z, drawn independently of the origin.
 */
Ray sample_incident(Footprint const& footprint, RngStream& rng);
Ray sample_incident(Geometry const& geo, RngStream& rng);

//! Cosine-weighted direction about +z (unit-disk projection)
Vec3 sample_cosine_hemisphere(RngStream& rng);

//! Uniform direction over the +z hemisphere
Vec3 sample_uniform_hemisphere(RngStream& rng);

//---------------------------------------------------------------------------//
/*!
 * Diffuse re-emission direction about a unit surface normal.
 *
 * The result always satisfies dot(direction, normal) > 0.
 */
Vec3 sample_emission(Vec3 const& normal, EmissionModel model, RngStream& rng);

//---------------------------------------------------------------------------//
//! Rotate a local (+z up) vector into the frame whose z axis is \c normal
Vec3 to_world_frame(Vec3 const& local, Vec3 const& normal);

//---------------------------------------------------------------------------//
}  // namespace getterflow
