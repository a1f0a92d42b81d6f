//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/GeometryConfig.cc
//---------------------------------------------------------------------------//
#include "GeometryConfig.hh"

#include <algorithm>

#include "getterflow/Error.hh"
#include "GeometryIO.hh"

namespace getterflow
{
namespace
{
template<class T>
T get_or(nlohmann::json const& j, char const* key, T fallback)
{
    auto iter = j.find(key);
    if (iter == j.end())
        return fallback;
    try
    {
        return iter->get<T>();
    }
    catch (nlohmann::json::exception const&)
    {
        throw InvalidInput(std::string("bad value for '") + key + "'");
    }
}

std::filesystem::path resolve(std::filesystem::path const& base, std::string const& p)
{
    std::filesystem::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}
}  // namespace

//---------------------------------------------------------------------------//
void check_keys(nlohmann::json const& j,
                std::initializer_list<char const*> allowed,
                std::string const& context)
{
    GF_VALIDATE(j.is_object(), context + " must be a JSON object");
    for (auto const& item : j.items())
    {
        bool known = std::any_of(allowed.begin(), allowed.end(), [&](char const* k) {
            return item.key() == k;
        });
        if (!known)
            throw InvalidInput("unknown key '" + item.key() + "' in " + context);
    }
}

//---------------------------------------------------------------------------//
PolygonPocketSpec polygon_pocket_from_json(nlohmann::json const& j)
{
    check_keys(j, {"type", "sides", "side_length", "theta_deg", "truncation_ratio"},
               "polygon pocket");
    PolygonPocketSpec spec;
    spec.sides = get_or(j, "sides", spec.sides);
    spec.top_side_length = get_or(j, "side_length", spec.top_side_length);
    spec.theta_deg = get_or(j, "theta_deg", spec.theta_deg);
    spec.truncation_ratio = get_or(j, "truncation_ratio", spec.truncation_ratio);
    spec.validate();
    return spec;
}

nlohmann::json to_json(PolygonPocketSpec const& spec)
{
    return {{"type", "polygon_pocket"},
            {"sides", spec.sides},
            {"side_length", spec.top_side_length},
            {"theta_deg", spec.theta_deg},
            {"truncation_ratio", spec.truncation_ratio}};
}

ConeArraySpec cone_array_from_json(nlohmann::json const& j)
{
    check_keys(j, {"type", "pitch", "base_radius", "theta_deg", "truncation_ratio"},
               "cone array");
    ConeArraySpec spec;
    spec.pitch = get_or(j, "pitch", spec.pitch);
    spec.base_radius = get_or(j, "base_radius", spec.pitch / 2);
    spec.theta_deg = get_or(j, "theta_deg", spec.theta_deg);
    spec.truncation_ratio = get_or(j, "truncation_ratio", spec.truncation_ratio);
    spec.validate();
    return spec;
}

nlohmann::json to_json(ConeArraySpec const& spec)
{
    return {{"type", "cone_array"},
            {"pitch", spec.pitch},
            {"base_radius", spec.base_radius},
            {"theta_deg", spec.theta_deg},
            {"truncation_ratio", spec.truncation_ratio}};
}

//---------------------------------------------------------------------------//
HeightMap heightmap_from_json(nlohmann::json const& j, std::filesystem::path const& base_dir)
{
    check_keys(j,
               {"type", "csv", "pgm", "sidecar", "rasterize", "cell_pitch", "outline_side",
                "depth_scale", "side_to_depth"},
               "height map");
    int sources = static_cast<int>(j.contains("csv")) + static_cast<int>(j.contains("pgm"))
                  + static_cast<int>(j.contains("rasterize"));
    GF_VALIDATE(sources == 1, "height map needs exactly one of csv, pgm or rasterize");

    HeightMap map;
    if (j.contains("csv"))
    {
        HeightMapFrame frame;
        frame.cell_pitch = get_or(j, "cell_pitch", frame.cell_pitch);
        frame.outline_side = get_or(j, "outline_side", frame.outline_side);
        frame.depth_scale = get_or(j, "depth_scale", frame.depth_scale);
        map = read_heightmap_csv(resolve(base_dir, j.at("csv").get<std::string>()), frame);
    }
    else if (j.contains("pgm"))
    {
        GF_VALIDATE(j.contains("sidecar"), "pgm height map needs a sidecar");
        map = read_heightmap_pgm(resolve(base_dir, j.at("pgm").get<std::string>()),
                                 resolve(base_dir, j.at("sidecar").get<std::string>()));
    }
    else
    {
        auto spec = polygon_pocket_from_json(j.at("rasterize"));
        double pitch = get_or(j, "cell_pitch", spec.top_side_length / 100);
        map = rasterize_polygon_pocket(spec, pitch);
    }
    if (j.contains("side_to_depth"))
        map = stretch_heightmap(std::move(map), j.at("side_to_depth").get<double>());
    map.validate();
    return map;
}

//---------------------------------------------------------------------------//
GeometryConfig geometry_from_json(nlohmann::json const& j, std::filesystem::path const& base_dir)
{
    GF_VALIDATE(j.is_object() && j.contains("type"), "geometry needs a 'type'");
    auto type = j.at("type").get<std::string>();
    if (type == "flat")
    {
        check_keys(j, {"type"}, "flat geometry");
        return {build_flat(), j};
    }
    if (type == "polygon_pocket")
    {
        auto spec = polygon_pocket_from_json(j);
        return {build_polygon_pocket(spec), to_json(spec)};
    }
    if (type == "cone_array")
    {
        auto spec = cone_array_from_json(j);
        return {build_cone_array(spec), to_json(spec)};
    }
    if (type == "heightmap")
    {
        auto map = heightmap_from_json(j, base_dir);
        nlohmann::json resolved = j;
        if (resolved.contains("rasterize"))
            resolved["rasterize"] = to_json(polygon_pocket_from_json(j.at("rasterize")));
        for (char const* key : {"csv", "pgm", "sidecar"})
        {
            if (resolved.contains(key))
            {
                auto path = resolve(base_dir, resolved[key].get<std::string>());
                resolved[key] = std::filesystem::absolute(path).string();
            }
        }
        return {build_heightmap(std::move(map)), resolved};
    }
    throw InvalidInput("unknown geometry type '" + type + "'");
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
