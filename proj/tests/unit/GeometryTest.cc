//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file unit/GeometryTest.cc
//---------------------------------------------------------------------------//
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "getterflow/Error.hh"
#include "getterflow/geometry/Geometry.hh"
#include "getterflow/geometry/GeometryConfig.hh"
#include "getterflow/geometry/GeometryIO.hh"
#include "getterflow/geometry/HeightMap.hh"
#include "getterflow/sampler/Sampler.hh"
#include "oracles/MeshOracle.hh"
#include "oracles/TiledConeArray.hh"

using namespace getterflow;

namespace
{
//---------------------------------------------------------------------------//
// Follow a random walk with the reference intersector, checking the other
// one at every step.
template<class Ref, class Other, class Check>
void compare_walks(Footprint const& fp,
                   Ref const& ref,
                   Other const& other,
                   double offset,
                   int particles,
                   Check&& check)
{
    for (int i = 0; i < particles; ++i)
    {
        RngStream rng(99, i);
        Ray ray = sample_incident(fp, rng);
        for (int step = 0; step < 200; ++step)
        {
            auto a = ref.intersect(ray);
            auto b = other.intersect(ray);
            ASSERT_TRUE(a.has_value());
            ASSERT_TRUE(b.has_value());
            check(*a, *b, ray);
            if (a->kind == Hit::Kind::top_plane_exit)
                break;
            ray.direction = sample_emission(a->normal, EmissionModel::isotropic_half_space, rng);
            ray.origin = a->point + offset * a->normal;
        }
    }
}

//---------------------------------------------------------------------------//
TEST(Footprint, regular_hexagon)
{
    auto fp = Footprint::polygon(regular_polygon(6, 2.0));
    EXPECT_NEAR(fp.area(), 1.5 * std::sqrt(3.0) * 4, 1e-12);
    EXPECT_NEAR(polygon_apothem(6, 2.0), std::sqrt(3.0), 1e-12);
    auto const& v = fp.vertices();
    ASSERT_EQ(v.size(), 6u);
    for (int k = 0; k < 6; ++k)
    {
        Vec2 e = v[(k + 1) % 6] - v[k];
        EXPECT_NEAR(std::hypot(e.x, e.y), 2.0, 1e-12);
        EXPECT_NEAR(dot(e, polygon_edge_normal(6, k)), 0, 1e-12);
        // Edge lies at the apothem along its normal
        EXPECT_NEAR(dot(v[k], polygon_edge_normal(6, k)), std::sqrt(3.0), 1e-12);
    }
}

TEST(Footprint, samples_stay_inside)
{
    for (int sides : {3, 5, 6, 8})
    {
        auto fp = Footprint::polygon(regular_polygon(sides, 1.0));
        RngStream rng(1, sides);
        double mx = 0;
        for (int i = 0; i < 20000; ++i)
        {
            Vec2 p = fp.sample(rng.uniform(), rng.uniform(), rng.uniform());
            ASSERT_TRUE(fp.contains(p, 1e-12));
            mx += p.x;
        }
        // Centroid of a regular polygon is the origin
        EXPECT_NEAR(mx / 20000, 0, 0.02);
    }
    auto par = Footprint::parallelogram({-1, -1}, {2, 0}, {1, 1});
    EXPECT_NEAR(par.area(), 2, 1e-14);
    EXPECT_TRUE(par.contains({0.2, -0.5}));
    EXPECT_FALSE(par.contains({-1.2, -0.5}));
}

//---------------------------------------------------------------------------//
TEST(PolygonPocket, spec_depths)
{
    PolygonPocketSpec s;
    s.theta_deg = 30;
    double apothem = std::sqrt(3.0) / 2;
    EXPECT_NEAR(s.apex_depth(), apothem / std::tan(pi / 6), 1e-12);
    s.truncation_ratio = 0.25;
    EXPECT_NEAR(s.depth(), 0.75 * apothem / std::tan(pi / 6), 1e-12);

    s.truncation_ratio = 1.0;
    EXPECT_THROW(s.validate(), InvalidInput);
    s.truncation_ratio = 0;
    s.sides = 2;
    EXPECT_THROW(s.validate(), InvalidInput);
    s.sides = 6;
    s.theta_deg = 0;
    EXPECT_THROW(s.validate(), InvalidInput);
}

TEST(PolygonPocket, axis_ray_reaches_apex)
{
    PolygonPocketSpec s;
    s.theta_deg = 20;
    PolygonPocket pocket(s);
    auto hit = pocket.intersect({{0, 0, 0}, {0, 0, -1}});
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->kind, Hit::Kind::facet);
    EXPECT_NEAR(hit->distance, s.apex_depth(), 1e-9);

    auto up = pocket.intersect({{0.1, 0, -0.5}, {0, 0, 1}});
    ASSERT_TRUE(up);
    EXPECT_EQ(up->kind, Hit::Kind::top_plane_exit);
    EXPECT_NEAR(up->distance, 0.5, 1e-12);

    s.truncation_ratio = 0.5;
    PolygonPocket trunc(s);
    auto floor = trunc.intersect({{0, 0, 0}, {0, 0, -1}});
    ASSERT_TRUE(floor);
    EXPECT_NEAR(floor->distance, s.depth(), 1e-12);
    EXPECT_NEAR(floor->normal.z, 1, 1e-15);
}

TEST(PolygonPocket, matches_brute_force_mesh)
{
    for (int sides : {3, 4, 6, 8})
    {
        for (double trunc : {0.0, 0.3})
        {
            PolygonPocketSpec s;
            s.sides = sides;
            s.theta_deg = 25;
            s.truncation_ratio = trunc;
            PolygonPocket pocket(s);
            test::MeshOracle mesh(pocket.triangles());
            double offset = 1e-9 * pocket.diameter();
            compare_walks(pocket.footprint(), pocket, mesh, offset, 200,
                          [](Hit const& a, Hit const& b, Ray const&) {
                              ASSERT_EQ(a.kind, b.kind);
                              EXPECT_NEAR(a.distance, b.distance, 1e-8);
                              if (a.kind == Hit::Kind::facet)
                              {
                                  EXPECT_NEAR(dot(a.normal, b.normal), 1, 1e-10);
                              }
                          });
        }
    }
}

TEST(PolygonPocket, hits_are_front_facing)
{
    PolygonPocketSpec s;
    s.theta_deg = 5;
    PolygonPocket pocket(s);
    double offset = 1e-9 * pocket.diameter();
    compare_walks(pocket.footprint(), pocket, pocket, offset, 100,
                  [&](Hit const& a, Hit const&, Ray const& ray) {
                      if (a.kind != Hit::Kind::facet)
                          return;
                      EXPECT_LT(dot(a.normal, ray.direction), 0);
                      EXPECT_NEAR(norm(a.normal), 1, 1e-12);
                      EXPECT_LE(a.point.z, 1e-9);
                      EXPECT_GE(a.point.z, -s.depth() - 1e-9);
                  });
}

//---------------------------------------------------------------------------//
TEST(ConeArray, spec_validation)
{
    ConeArraySpec s;
    s.base_radius = 0.6;
    EXPECT_THROW(s.validate(), InvalidInput);
    s.base_radius = 0.5;
    s.theta_deg = 30;
    EXPECT_NEAR(s.apex_height(), 0.5 / std::tan(pi / 6), 1e-12);
}

TEST(ConeArray, matches_tiled_supercell)
{
    for (double trunc : {0.0, 0.4})
    {
        for (double radius : {0.5, 0.35})
        {
            ConeArraySpec s;
            s.theta_deg = 15;
            s.truncation_ratio = trunc;
            s.base_radius = radius;
            ConeArray cell(s);
            test::TiledConeArray tiled(s, 5);
            double offset = 1e-9 * cell.diameter();
            compare_walks(cell.footprint(), cell, tiled, offset, 300,
                          [](Hit const& a, Hit const& b, Ray const&) {
                              ASSERT_EQ(a.kind, b.kind);
                              EXPECT_NEAR(a.distance, b.distance, 1e-7 * (1 + a.distance));
                              if (a.kind == Hit::Kind::facet)
                              {
                                  EXPECT_NEAR(dot(a.normal, b.normal), 1, 1e-8);
                              }
                          });
        }
    }
}

TEST(ConeArray, long_grazing_flight_wraps)
{
    ConeArraySpec s;
    s.theta_deg = 60;
    s.base_radius = 0.3;
    ConeArray cell(s);
    test::TiledConeArray tiled(s, 5);
    // Skims just above the base in the gap between two cone rows
    Vec3 d = normalized({1, 1e-3, 1e-4});
    Ray ray{{0.0, 0.25 * std::sqrt(3.0), -s.height() + 1e-3}, d};
    auto a = cell.intersect(ray);
    auto b = tiled.intersect(ray);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->kind, b->kind);
    EXPECT_NEAR(a->distance, b->distance, 1e-7 * a->distance);
    EXPECT_GT(a->distance, 3.0);
}

//---------------------------------------------------------------------------//
TEST(HeightMap, stretch)
{
    PolygonPocketSpec s;
    s.theta_deg = 30;
    auto map = rasterize_polygon_pocket(s, 0.02);
    auto unit = stretch_heightmap(map, 1.0);
    EXPECT_NEAR(unit.max_depth(), s.top_side_length, 1e-12);
    auto half = stretch_heightmap(map, 0.5);
    EXPECT_NEAR(half.max_depth(), 2 * unit.max_depth(), 1e-12);
    EXPECT_EQ(half.nx, map.nx);
    EXPECT_EQ(half.cell_pitch, map.cell_pitch);
    EXPECT_THROW(stretch_heightmap(map, 0), InvalidInput);
    EXPECT_THROW(stretch_heightmap(map, -1), InvalidInput);

    HeightMap flat{3, 3, std::vector<double>(9, 0.0), 1.0, 1.0, 1.0};
    EXPECT_EQ(stretch_heightmap(flat, 2.0).depth_scale, 1.0);
}

TEST(HeightMap, rasterized_pocket_depth)
{
    PolygonPocketSpec s;
    s.theta_deg = 30;
    s.truncation_ratio = 0.2;
    auto map = rasterize_polygon_pocket(s, 0.01);
    EXPECT_NEAR(map.max_depth(), s.depth(), 1e-12);
    // Extents cover the mouth: apothem along x, circumradius along y
    EXPECT_GE((map.nx - 1) * map.cell_pitch / 2, s.apothem());
    EXPECT_GE((map.ny - 1) * map.cell_pitch / 2, s.top_side_length);
}

TEST(HeightMapPocket, dda_matches_brute_force)
{
    PolygonPocketSpec s;
    s.theta_deg = 35;
    s.truncation_ratio = 0.3;
    HeightMapPocket hm(rasterize_polygon_pocket(s, 0.05));
    // Whole grid (cells straddling the outline are reachable on the inside)
    // plus the vertical walls
    auto const& m = hm.map();
    auto node = [&m](std::size_t i, std::size_t j) {
        return Vec3{m.x(i), m.y(j), m.at(i, j) * m.depth_scale};
    };
    std::vector<Triangle> tris;
    for (std::size_t j = 0; j + 1 < m.ny; ++j)
    {
        for (std::size_t i = 0; i + 1 < m.nx; ++i)
        {
            tris.push_back(make_triangle(node(i, j), node(i + 1, j), node(i + 1, j + 1)));
            tris.push_back(make_triangle(node(i, j), node(i + 1, j + 1), node(i, j + 1)));
        }
    }
    for (auto const& t : hm.triangles())
    {
        if (t.normal.z == 0)
            tris.push_back(t);
    }
    test::MeshOracle mesh(std::move(tris));
    double offset = 1e-9 * hm.diameter();
    compare_walks(hm.footprint(), hm, mesh, offset, 150,
                  [](Hit const& a, Hit const& b, Ray const&) {
                      ASSERT_EQ(a.kind, b.kind);
                      EXPECT_NEAR(a.distance, b.distance, 1e-8);
                  });
}

TEST(HeightMapPocket, tracks_analytic_surface)
{
    PolygonPocketSpec s;
    s.theta_deg = 30;
    double pitch = 0.005;
    HeightMapPocket hm(rasterize_polygon_pocket(s, pitch));
    PolygonPocket pocket(s);
    int compared = 0;
    for (int i = 0; i < 2000; ++i)
    {
        RngStream rng(5, i);
        Ray ray = sample_incident(pocket.footprint(), rng);
        auto a = pocket.intersect(ray);
        auto b = hm.intersect(ray);
        ASSERT_TRUE(a && b);
        // Facet slope is cot(30 deg); height error is below a few pitches
        EXPECT_NEAR(a->point.z, b->point.z, 4 * pitch / std::tan(pi / 6));
        ++compared;
    }
    EXPECT_EQ(compared, 2000);
}

//---------------------------------------------------------------------------//
TEST(GeometryIO, csv_heightmap)
{
    std::istringstream is("# comment\n0,0,0\n0,-1,0\n\n0 0 0\n");
    auto map = read_heightmap_csv(is, {0.5, 1.0, 2.0});
    EXPECT_EQ(map.nx, 3u);
    EXPECT_EQ(map.ny, 3u);
    EXPECT_EQ(map.at(1, 1), -1);
    EXPECT_NEAR(map.max_depth(), 2.0, 1e-15);

    std::istringstream bad("0,0\n0,x\n");
    try
    {
        read_heightmap_csv(bad, {});
        FAIL() << "expected parse error";
    }
    catch (ParseError const& e)
    {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
    std::istringstream ragged("0,0\n0\n");
    EXPECT_THROW(read_heightmap_csv(ragged, {}), ParseError);
}

TEST(GeometryIO, pgm_heightmap)
{
    std::string pgm = "P5\n# c\n2 2\n255\n";
    pgm += static_cast<char>(255);
    pgm += static_cast<char>(0);
    pgm += static_cast<char>(255);
    pgm += static_cast<char>(255);
    std::istringstream is(pgm);
    auto map = read_heightmap_pgm(
        is, R"({"cell_pitch": 0.1, "outline_side": 0.2, "black_height": -1, "white_height": 0})");
    ASSERT_EQ(map.nx, 2u);
    // First image row is the top (highest y)
    EXPECT_EQ(map.at(1, 1), -1);
    EXPECT_EQ(map.at(0, 1), 0);
    EXPECT_EQ(map.at(0, 0), 0);

    std::istringstream truncated("P5\n2 2\n255\n\x01");
    EXPECT_THROW(read_heightmap_pgm(truncated, R"({"cell_pitch": 0.1, "outline_side": 0.2,
        "black_height": -1, "white_height": 0})"),
                 ParseError);
}

TEST(GeometryIO, stl_export)
{
    std::ostringstream os;
    write_stl(os, build_polygon_pocket({}), "pocket");
    auto text = os.str();
    EXPECT_EQ(text.rfind("solid pocket", 0), 0u);
    EXPECT_NE(text.find("facet normal"), std::string::npos);
    EXPECT_NE(text.find("endsolid pocket"), std::string::npos);
}

//---------------------------------------------------------------------------//
TEST(Geometry, builders)
{
    auto flat = build_flat();
    EXPECT_TRUE(flat.is_flat());
    EXPECT_EQ(flat.lateral_rule(), LateralRule::periodic_cell);

    PolygonPocketSpec s;
    s.theta_deg = 90;
    auto degenerate = build_polygon_pocket(s);
    EXPECT_TRUE(degenerate.is_flat());
    EXPECT_EQ(degenerate.lateral_rule(), LateralRule::closed_walls);

    auto cones = build_cone_array({});
    EXPECT_TRUE(cones.lattice_vectors().has_value());
    EXPECT_EQ(cones.descriptor().at("type"), "cone_array");
    // Default cones are taller than the cell is wide
    EXPECT_DOUBLE_EQ(cones.tolerance(), 1e-9 * ConeArraySpec{}.apex_height());
}

TEST(GeometryConfig, parse_and_reject)
{
    auto cfg = geometry_from_json(
        nlohmann::json::parse(R"({"type": "polygon_pocket", "theta_deg": 20, "sides": 5})"));
    EXPECT_EQ(cfg.resolved.at("sides"), 5);
    EXPECT_EQ(cfg.resolved.at("truncation_ratio"), 0.0);
    EXPECT_THROW(geometry_from_json(nlohmann::json::parse(R"({"type": "torus"})")),
                 InvalidInput);
    EXPECT_THROW(
        geometry_from_json(nlohmann::json::parse(R"({"type": "flat", "theta": 3})")),
        InvalidInput);
    // Re-ingesting the resolved form gives the same geometry
    auto again = geometry_from_json(cfg.resolved);
    EXPECT_EQ(again.geometry.descriptor(), cfg.geometry.descriptor());
}

//---------------------------------------------------------------------------//
}  // namespace
