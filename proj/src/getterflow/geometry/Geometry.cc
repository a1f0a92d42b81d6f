//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/Geometry.cc
//---------------------------------------------------------------------------//
#include "Geometry.hh"

#include <cmath>

#include "getterflow/Error.hh"

namespace getterflow
{
namespace
{
template<class... Ts>
struct Overload : Ts...
{
    using Ts::operator()...;
};
template<class... Ts>
Overload(Ts...) -> Overload<Ts...>;
}  // namespace

//---------------------------------------------------------------------------//
Geometry::Geometry(Shape shape)
    : shape_(std::make_shared<Shape const>(std::move(shape)))
{
    double diameter = std::visit([](auto const& s) { return s.diameter(); }, *shape_);
    tolerance_ = 1e-9 * diameter;
}

//---------------------------------------------------------------------------//
std::optional<Hit> Geometry::intersect(Ray const& ray) const
{
    return std::visit([&ray](auto const& s) { return s.intersect(ray); }, *shape_);
}

Footprint const& Geometry::footprint() const
{
    return std::visit(
        [](auto const& s) -> Footprint const& { return s.footprint(); }, *shape_);
}

LateralRule Geometry::lateral_rule() const
{
    if (std::holds_alternative<ConeArray>(*shape_))
        return LateralRule::periodic_cell;
    if (auto const* flat = std::get_if<FlatSurface>(shape_.get()))
    {
        return flat->footprint().is_parallelogram() ? LateralRule::periodic_cell
                                                    : LateralRule::closed_walls;
    }
    return LateralRule::closed_walls;
}

std::optional<std::array<Vec2, 2>> Geometry::lattice_vectors() const
{
    if (auto const* cones = std::get_if<ConeArray>(shape_.get()))
        return cones->lattice_vectors();
    auto const& fp = this->footprint();
    if (fp.is_parallelogram())
    {
        auto const& v = fp.vertices();
        return std::array<Vec2, 2>{v[1] - v[0], v[3] - v[0]};
    }
    return std::nullopt;
}

bool Geometry::is_flat() const
{
    if (std::holds_alternative<FlatSurface>(*shape_))
        return true;
    if (auto const* hm = std::get_if<HeightMapPocket>(shape_.get()))
        return hm->map().max_depth() == 0;
    return false;
}

//---------------------------------------------------------------------------//
nlohmann::json Geometry::descriptor() const
{
    using nlohmann::json;
    return std::visit(
        Overload{
            [](FlatSurface const& s) {
                json j{{"type", "flat"}};
                j["footprint_area"] = s.footprint().area();
                return j;
            },
            [](PolygonPocket const& s) {
                auto const& p = s.spec();
                return json{{"type", "polygon_pocket"},
                            {"sides", p.sides},
                            {"side_length", p.top_side_length},
                            {"theta_deg", p.theta_deg},
                            {"truncation_ratio", p.truncation_ratio},
                            {"depth", p.depth()}};
            },
            [](ConeArray const& s) {
                auto const& p = s.spec();
                return json{{"type", "cone_array"},
                            {"pitch", p.pitch},
                            {"base_radius", p.base_radius},
                            {"theta_deg", p.theta_deg},
                            {"truncation_ratio", p.truncation_ratio},
                            {"height", p.height()}};
            },
            [](HeightMapPocket const& s) {
                auto const& m = s.map();
                return json{{"type", "heightmap"},
                            {"nx", m.nx},
                            {"ny", m.ny},
                            {"cell_pitch", m.cell_pitch},
                            {"outline_side", m.outline_side},
                            {"depth_scale", m.depth_scale},
                            {"max_depth", m.max_depth()}};
            },
        },
        *shape_);
}

std::vector<Triangle> Geometry::triangles() const
{
    return std::visit([](auto const& s) { return s.triangles(); }, *shape_);
}

//---------------------------------------------------------------------------//
Geometry build_polygon_pocket(PolygonPocketSpec const& spec)
{
    spec.validate();
    if (spec.theta_deg >= 90)
    {
        return Geometry{FlatSurface{
            Footprint::polygon(regular_polygon(spec.sides, spec.top_side_length))}};
    }
    return Geometry{PolygonPocket{spec}};
}

Geometry build_cone_array(ConeArraySpec const& spec)
{
    spec.validate();
    if (spec.theta_deg >= 90)
    {
        double p = spec.pitch;
        return Geometry{FlatSurface{Footprint::parallelogram(
            {-0.75 * p, -0.25 * std::sqrt(3.0) * p},
            {p, 0},
            {0.5 * p, 0.5 * std::sqrt(3.0) * p})}};
    }
    return Geometry{ConeArray{spec}};
}

Geometry build_heightmap(HeightMap map)
{
    return Geometry{HeightMapPocket{std::move(map)}};
}

Geometry build_flat()
{
    return Geometry{FlatSurface{Footprint::parallelogram({0, 0}, {1, 0}, {0, 1})}};
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
