//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/HeightMapPocket.cc
//---------------------------------------------------------------------------//
#include "HeightMapPocket.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "getterflow/Error.hh"
#include "FlatSurface.hh"

namespace getterflow
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

// Barycentric slack so rays through shared edges hit at least one triangle
constexpr double edge_slack = 1e-10;

//! Moller-Trumbore restricted to front-facing triangles
std::optional<double> ray_triangle(Ray const& ray,
                                   Vec3 const& a,
                                   Vec3 const& b,
                                   Vec3 const& c,
                                   double t_min)
{
    Vec3 e1 = b - a;
    Vec3 e2 = c - a;
    Vec3 n = cross(e1, e2);
    if (dot(n, ray.direction) >= 0)
        return std::nullopt;

    Vec3 pvec = cross(ray.direction, e2);
    double det = dot(e1, pvec);
    double inv = 1 / det;
    Vec3 tvec = ray.origin - a;
    double u = dot(tvec, pvec) * inv;
    if (u < -edge_slack || u > 1 + edge_slack)
        return std::nullopt;
    Vec3 qvec = cross(tvec, e1);
    double v = dot(ray.direction, qvec) * inv;
    if (v < -edge_slack || u + v > 1 + edge_slack)
        return std::nullopt;
    double t = dot(e2, qvec) * inv;
    if (t < t_min)
        return std::nullopt;
    return std::max(0.0, t);
}
}  // namespace

//---------------------------------------------------------------------------//
HeightMapPocket::HeightMapPocket(HeightMap map)
    : map_(std::move(map))
    , footprint_(Footprint::polygon(regular_polygon(6, map_.outline_side)))
{
    map_.validate();
    for (int k = 0; k < 6; ++k)
        wall_normals_[k] = polygon_edge_normal(6, k);
    apothem_ = polygon_apothem(6, map_.outline_side);

    x0_ = map_.x(0);
    y0_ = map_.y(0);
    double circumradius = map_.outline_side;
    double pitch = map_.cell_pitch;
    GF_VALIDATE(-x0_ >= apothem_ - 1e-12 * pitch
                    && -y0_ >= circumradius - 1e-12 * pitch,
                "height map grid does not cover the hexagonal outline");

    z_.resize(map_.heights.size());
    std::transform(map_.heights.begin(), map_.heights.end(), z_.begin(),
                   [this](double h) { return h * map_.depth_scale; });
    lowest_ = *std::min_element(z_.begin(), z_.end());

    std::size_t cx = map_.nx - 1;
    std::size_t cy = map_.ny - 1;
    cell_top_.resize(cx * cy);
    for (std::size_t j = 0; j < cy; ++j)
    {
        for (std::size_t i = 0; i < cx; ++i)
        {
            cell_top_[j * cx + i] = std::max({z_[j * map_.nx + i],
                                              z_[j * map_.nx + i + 1],
                                              z_[(j + 1) * map_.nx + i],
                                              z_[(j + 1) * map_.nx + i + 1]});
        }
    }
    diameter_ = std::max(2 * circumradius, -lowest_);
}

//---------------------------------------------------------------------------//
std::optional<Hit> HeightMapPocket::intersect_cell(std::size_t i,
                                                   std::size_t j,
                                                   Ray const& ray,
                                                   double t_max) const
{
    Vec3 p00 = this->node(i, j);
    Vec3 p10 = this->node(i + 1, j);
    Vec3 p01 = this->node(i, j + 1);
    Vec3 p11 = this->node(i + 1, j + 1);
    double t_min = -1e-9 * diameter_;

    std::optional<Hit> best;
    auto consider = [&](Vec3 const& a, Vec3 const& b, Vec3 const& c) {
        auto t = ray_triangle(ray, a, b, c, t_min);
        if (t && *t < t_max && (!best || *t < best->distance))
        {
            Hit hit;
            hit.kind = Hit::Kind::facet;
            hit.distance = *t;
            hit.point = ray.at(*t);
            hit.normal = normalized(cross(b - a, c - a));
            best = hit;
        }
    };
    consider(p00, p10, p11);
    consider(p00, p11, p01);
    return best;
}

//---------------------------------------------------------------------------//
std::optional<Hit> HeightMapPocket::intersect(Ray const& ray) const
{
    Vec3 const& o = ray.origin;
    Vec3 const& d = ray.direction;

    double t_top = inf;
    if (d.z > 0)
        t_top = std::max(0.0, -o.z / d.z);

    double t_wall = inf;
    int wall = -1;
    for (int k = 0; k < 6; ++k)
    {
        double rate = d.x * wall_normals_[k].x + d.y * wall_normals_[k].y;
        if (rate <= 0)
            continue;
        double t = std::max(
            0.0, (apothem_ - (o.x * wall_normals_[k].x + o.y * wall_normals_[k].y)) / rate);
        if (t < t_wall)
        {
            t_wall = t;
            wall = k;
        }
    }
    double t_limit = std::min(t_top, t_wall);

    // 2-D DDA over grid cells
    double pitch = map_.cell_pitch;
    std::size_t cx = map_.nx - 1;
    std::size_t cy = map_.ny - 1;
    double gx = (o.x - x0_) / pitch;
    double gy = (o.y - y0_) / pitch;
    auto clamp_cell = [](double g, std::size_t n) {
        auto c = static_cast<long>(std::floor(g));
        return static_cast<std::size_t>(std::clamp<long>(c, 0, static_cast<long>(n) - 1));
    };
    std::size_t i = clamp_cell(gx, cx);
    std::size_t j = clamp_cell(gy, cy);

    int step_i = (d.x > 0) ? 1 : -1;
    int step_j = (d.y > 0) ? 1 : -1;
    double t_next_x = inf;
    double t_next_y = inf;
    double dt_x = inf;
    double dt_y = inf;
    if (d.x != 0)
    {
        double boundary = x0_ + static_cast<double>(i + (d.x > 0 ? 1 : 0)) * pitch;
        t_next_x = std::max(0.0, (boundary - o.x) / d.x);
        dt_x = pitch / std::fabs(d.x);
    }
    if (d.y != 0)
    {
        double boundary = y0_ + static_cast<double>(j + (d.y > 0 ? 1 : 0)) * pitch;
        t_next_y = std::max(0.0, (boundary - o.y) / d.y);
        dt_y = pitch / std::fabs(d.y);
    }

    double t_enter = 0;
    double const tol = 1e-9 * diameter_;
    std::optional<Hit> mesh_hit;
    while (t_enter <= t_limit)
    {
        double t_exit = std::min({t_next_x, t_next_y, t_limit});
        double z_lo = std::min(o.z + t_enter * d.z,
                               (t_exit == inf) ? -inf : o.z + t_exit * d.z);
        if (z_lo <= cell_top_[j * cx + i] + tol)
        {
            // Neighbor cells may hold the true nearest hit only beyond
            // t_exit, so the first cell with a hit wins.
            mesh_hit = this->intersect_cell(i, j, ray, t_limit);
            if (mesh_hit)
                break;
        }
        if (t_exit >= t_limit)
            break;

        if (t_next_x <= t_next_y)
        {
            if ((step_i < 0 && i == 0) || (step_i > 0 && i + 1 >= cx))
                break;
            i += step_i;
            t_enter = t_next_x;
            t_next_x += dt_x;
        }
        else
        {
            if ((step_j < 0 && j == 0) || (step_j > 0 && j + 1 >= cy))
                break;
            j += step_j;
            t_enter = t_next_y;
            t_next_y += dt_y;
        }
    }

    Hit hit;
    if (mesh_hit && mesh_hit->distance < t_top)
        return mesh_hit;
    if (t_top <= t_wall)
    {
        if (t_top == inf)
            return std::nullopt;
        hit.kind = Hit::Kind::top_plane_exit;
        hit.distance = t_top;
        hit.point = ray.at(t_top);
        return hit;
    }
    hit.kind = Hit::Kind::facet;
    hit.distance = t_wall;
    hit.point = ray.at(t_wall);
    if (hit.point.z < lowest_ - tol)
    {
        // Passed under the mesh: the surface leaked
        return std::nullopt;
    }
    hit.normal = {-wall_normals_[wall].x, -wall_normals_[wall].y, 0};
    return hit;
}

//---------------------------------------------------------------------------//
std::vector<Triangle> HeightMapPocket::triangles() const
{
    std::vector<Triangle> result;
    auto inside = [this](Vec3 const& a, Vec3 const& b, Vec3 const& c) {
        Vec2 centroid{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
        return footprint_.contains(centroid);
    };
    for (std::size_t j = 0; j + 1 < map_.ny; ++j)
    {
        for (std::size_t i = 0; i + 1 < map_.nx; ++i)
        {
            Vec3 p00 = this->node(i, j);
            Vec3 p10 = this->node(i + 1, j);
            Vec3 p01 = this->node(i, j + 1);
            Vec3 p11 = this->node(i + 1, j + 1);
            if (inside(p00, p10, p11))
                result.push_back(make_triangle(p00, p10, p11));
            if (inside(p00, p11, p01))
                result.push_back(make_triangle(p00, p11, p01));
        }
    }
    auto const& v = footprint_.vertices();
    for (std::size_t k = 0; k < v.size(); ++k)
    {
        Vec2 a = v[k];
        Vec2 b = v[(k + 1) % v.size()];
        Vec3 top_a{a.x, a.y, 0};
        Vec3 top_b{b.x, b.y, 0};
        Vec3 bot_a{a.x, a.y, lowest_};
        Vec3 bot_b{b.x, b.y, lowest_};
        if (lowest_ < 0)
        {
            result.push_back(make_triangle(top_a, bot_b, bot_a));
            result.push_back(make_triangle(top_a, top_b, bot_b));
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
