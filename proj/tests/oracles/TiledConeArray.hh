//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file oracles/TiledConeArray.hh
//! \brief Explicit multi-cell cone array used to check single-cell wrapping
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "getterflow/Types.hh"
#include "getterflow/geometry/ConeArray.hh"

namespace getterflow::test
{
//---------------------------------------------------------------------------//
/*!
 * A tiles x tiles block of explicit cones on a supercell.
 *
 * The supercell is the parallelogram spanned by tiles*a1 and tiles*a2 with
 * the single-cell rhombus at its center. Every cone whose base can reach
 * into the supercell is tested by brute force, and rays leaving the
 * supercell re-enter on the opposite side. No per-cell wrapping is used.
 */
class TiledConeArray
{
  public:
    TiledConeArray(ConeArraySpec const& spec, int tiles) : spec_(spec), tiles_(tiles)
    {
        double p = spec.pitch;
        a1_ = {p, 0};
        a2_ = {0.5 * p, 0.5 * std::sqrt(3.0) * p};
        A1_ = {tiles * a1_.x, tiles * a1_.y};
        A2_ = {tiles * a2_.x, tiles * a2_.y};
        int half = tiles / 2;
        corner_ = {-0.75 * p - half * (a1_.x + a2_.x), -0.25 * std::sqrt(3.0) * p - half * (a1_.y + a2_.y)};

        double k = std::tan(spec.theta_deg * pi / 180);
        k2_ = k * k;
        apex_height_ = spec.base_radius / k;
        height_ = apex_height_ * (1 - spec.truncation_ratio);
        apex_z_ = apex_height_ - height_;
        tip_radius_ = spec.base_radius * spec.truncation_ratio;
        for (int i = -half - 1; i <= half + 1; ++i)
        {
            for (int j = -half - 1; j <= half + 1; ++j)
                centers_.push_back({i * a1_.x + j * a2_.x, i * a1_.y + j * a2_.y});
        }
        det_ = A1_.x * A2_.y - A1_.y * A2_.x;
    }

    std::optional<Hit> intersect(Ray const& ray) const
    {
        Vec3 o = wrap(ray.origin);
        Vec3 const& d = ray.direction;
        double travelled = 0;
        for (int crossings = 0; crossings < 1'000'000; ++crossings)
        {
            auto event = nearest_event(o, d);
            auto [t_exit, shift] = boundary_exit(o, d);
            if (event && event->distance <= t_exit)
            {
                event->point = o + event->distance * d;
                event->distance += travelled;
                return event;
            }
            if (!std::isfinite(t_exit))
                return std::nullopt;
            o += t_exit * d;
            o.x += shift.x;
            o.y += shift.y;
            travelled += t_exit;
        }
        return std::nullopt;
    }

  private:
    static constexpr double inf = std::numeric_limits<double>::infinity();

    ConeArraySpec spec_;
    int tiles_;
    Vec2 a1_, a2_, A1_, A2_, corner_;
    double det_;
    double k2_, apex_height_, height_, apex_z_, tip_radius_;
    std::vector<Vec2> centers_;

    // Fractional supercell coordinates of a lateral point
    Vec2 frac(double x, double y) const
    {
        double rx = x - corner_.x;
        double ry = y - corner_.y;
        return {(rx * A2_.y - ry * A2_.x) / det_, (A1_.x * ry - A1_.y * rx) / det_};
    }

    Vec3 wrap(Vec3 p) const
    {
        Vec2 f = frac(p.x, p.y);
        double fs = std::floor(f.x);
        double ft = std::floor(f.y);
        p.x -= fs * A1_.x + ft * A2_.x;
        p.y -= fs * A1_.y + ft * A2_.y;
        return p;
    }

    std::pair<double, Vec2> boundary_exit(Vec3 const& o, Vec3 const& d) const
    {
        Vec2 f = frac(o.x, o.y);
        Vec2 fd = {(d.x * A2_.y - d.y * A2_.x) / det_, (A1_.x * d.y - A1_.y * d.x) / det_};
        double best = inf;
        Vec2 shift{0, 0};
        auto consider = [&](double pos, double rate, Vec2 const& A) {
            if (rate > 0)
            {
                double t = std::max(0.0, (1 - pos) / rate);
                if (t < best)
                {
                    best = t;
                    shift = {-A.x, -A.y};
                }
            }
            else if (rate < 0)
            {
                double t = std::max(0.0, -pos / rate);
                if (t < best)
                {
                    best = t;
                    shift = {A.x, A.y};
                }
            }
        };
        consider(f.x, fd.x, A1_);
        consider(f.y, fd.y, A2_);
        return {best, shift};
    }

    std::optional<Hit> nearest_event(Vec3 const& o, Vec3 const& d) const
    {
        std::optional<Hit> best;
        auto offer = [&best](double t, Hit::Kind kind, Vec3 n) {
            if (t >= 0 && (!best || t < best->distance))
                best = Hit{kind, t, {}, n};
        };

        if (d.z > 0)
            offer(std::max(0.0, -o.z / d.z), Hit::Kind::top_plane_exit, {0, 0, 1});
        if (d.z < 0)
            offer((-height_ - o.z) / d.z, Hit::Kind::facet, {0, 0, 1});

        for (Vec2 const& c : centers_)
        {
            double ox = o.x - c.x;
            double oy = o.y - c.y;
            double w = apex_z_ - o.z;
            double A = d.x * d.x + d.y * d.y - k2_ * d.z * d.z;
            double B = 2 * (ox * d.x + oy * d.y + k2_ * w * d.z);
            double C = ox * ox + oy * oy - k2_ * w * w;
            double roots[2];
            int nroots = 0;
            if (std::abs(A) < 1e-14)
            {
                if (B != 0)
                    roots[nroots++] = -C / B;
            }
            else
            {
                double disc = B * B - 4 * A * C;
                if (disc >= 0)
                {
                    double sq = std::sqrt(disc);
                    roots[nroots++] = (-B - sq) / (2 * A);
                    roots[nroots++] = (-B + sq) / (2 * A);
                }
            }
            for (int r = 0; r < nroots; ++r)
            {
                double t = roots[r];
                if (!(t >= 0) || (best && t >= best->distance))
                    continue;
                Vec3 x = o + t * d;
                if (x.z < -height_ || x.z > 0)
                    continue;
                Vec3 n{x.x - c.x, x.y - c.y, k2_ * (apex_z_ - x.z)};
                n = normalized(n);
                if (dot(n, d) < 0)
                    offer(t, Hit::Kind::facet, n);
            }
            if (tip_radius_ > 0 && d.z < 0)
            {
                double t = -o.z / d.z;
                Vec3 x = o + t * d;
                double rx = x.x - c.x;
                double ry = x.y - c.y;
                if (rx * rx + ry * ry <= tip_radius_ * tip_radius_)
                    offer(t, Hit::Kind::facet, {0, 0, 1});
            }
        }
        return best;
    }
};

//---------------------------------------------------------------------------//
}  // namespace getterflow::test
