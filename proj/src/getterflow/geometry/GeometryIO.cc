//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/geometry/GeometryIO.cc
//---------------------------------------------------------------------------//
#include "GeometryIO.hh"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "getterflow/Error.hh"

namespace getterflow
{
namespace
{
std::vector<double> split_numbers(std::string const& line, std::size_t lineno)
{
    std::vector<double> result;
    std::size_t pos = 0;
    auto is_sep = [](char c) {
        return c == ',' || c == ';' || c == ' ' || c == '\t' || c == '\r';
    };
    while (pos < line.size())
    {
        while (pos < line.size() && is_sep(line[pos]))
            ++pos;
        if (pos >= line.size())
            break;
        std::size_t end = pos;
        while (end < line.size() && !is_sep(line[end]))
            ++end;
        double value{};
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
        if (ec != std::errc{} || ptr != line.data() + end)
        {
            throw ParseError("invalid number '" + line.substr(pos, end - pos) + "'",
                             lineno);
        }
        result.push_back(value);
        pos = end;
    }
    return result;
}

std::string next_pgm_token(std::istream& is)
{
    std::string token;
    char c;
    while (is.get(c))
    {
        if (c == '#')
        {
            std::string comment;
            std::getline(is, comment);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c)))
        {
            if (!token.empty())
                break;
            continue;
        }
        token.push_back(c);
    }
    return token;
}
}  // namespace

//---------------------------------------------------------------------------//
HeightMap read_heightmap_csv(std::istream& is, HeightMapFrame const& frame)
{
    HeightMap map;
    map.cell_pitch = frame.cell_pitch;
    map.outline_side = frame.outline_side;
    map.depth_scale = frame.depth_scale;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line))
    {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto row = split_numbers(line, lineno);
        if (map.nx == 0)
            map.nx = row.size();
        else if (row.size() != map.nx)
            throw ParseError("ragged height map row", lineno);
        map.heights.insert(map.heights.end(), row.begin(), row.end());
        ++map.ny;
    }
    if (map.ny == 0)
        throw ParseError("empty height map");
    map.validate();
    return map;
}

HeightMap read_heightmap_csv(std::filesystem::path const& path,
                             HeightMapFrame const& frame)
{
    std::ifstream is(path);
    if (!is)
        throw ParseError("cannot open height map '" + path.string() + "'");
    return read_heightmap_csv(is, frame);
}

//---------------------------------------------------------------------------//
HeightMap read_heightmap_pgm(std::istream& is, std::string const& sidecar_json)
{
    nlohmann::json side;
    try
    {
        side = nlohmann::json::parse(sidecar_json);
    }
    catch (nlohmann::json::exception const& e)
    {
        throw ParseError(std::string("invalid height map sidecar: ") + e.what());
    }
    for (char const* key : {"cell_pitch", "outline_side", "black_height", "white_height"})
    {
        if (!side.contains(key))
            throw ParseError(std::string("height map sidecar lacks '") + key + "'");
    }

    if (next_pgm_token(is) != "P5")
        throw ParseError("height map image is not a binary PGM (P5)");
    std::size_t width = 0;
    std::size_t height = 0;
    unsigned long maxval = 0;
    try
    {
        width = std::stoul(next_pgm_token(is));
        height = std::stoul(next_pgm_token(is));
        maxval = std::stoul(next_pgm_token(is));
    }
    catch (std::exception const&)
    {
        throw ParseError("malformed PGM header");
    }
    if (maxval == 0 || maxval > 65535)
        throw ParseError("PGM maxval out of range");

    std::size_t bytes_per = (maxval > 255) ? 2 : 1;
    std::vector<unsigned char> raw(width * height * bytes_per);
    is.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(is.gcount()) != raw.size())
        throw ParseError("truncated PGM pixel data");

    double black = side["black_height"].get<double>();
    double white = side["white_height"].get<double>();

    HeightMap map;
    map.nx = width;
    map.ny = height;
    map.cell_pitch = side["cell_pitch"].get<double>();
    map.outline_side = side["outline_side"].get<double>();
    map.depth_scale = side.value("depth_scale", 1.0);
    map.heights.resize(width * height);
    for (std::size_t row = 0; row < height; ++row)
    {
        std::size_t j = height - 1 - row;
        for (std::size_t i = 0; i < width; ++i)
        {
            std::size_t k = (row * width + i) * bytes_per;
            std::uint32_t v = raw[k];
            if (bytes_per == 2)
                v = (v << 8) | raw[k + 1];
            double frac = static_cast<double>(v) / static_cast<double>(maxval);
            map.heights[j * width + i] = black + (white - black) * frac;
        }
    }
    map.validate();
    return map;
}

HeightMap read_heightmap_pgm(std::filesystem::path const& pgm_path,
                             std::filesystem::path const& sidecar_path)
{
    std::ifstream pgm(pgm_path, std::ios::binary);
    if (!pgm)
        throw ParseError("cannot open PGM '" + pgm_path.string() + "'");
    std::ifstream side(sidecar_path);
    if (!side)
        throw ParseError("cannot open sidecar '" + sidecar_path.string() + "'");
    std::stringstream buf;
    buf << side.rdbuf();
    return read_heightmap_pgm(pgm, buf.str());
}

//---------------------------------------------------------------------------//
void write_stl(std::ostream& os, Geometry const& geo, std::string const& name)
{
    auto old_precision = os.precision(9);
    os << "solid " << name << '\n';
    for (auto const& t : geo.triangles())
    {
        os << "  facet normal " << t.normal.x << ' ' << t.normal.y << ' ' << t.normal.z
           << "\n    outer loop\n";
        for (Vec3 const* v : {&t.a, &t.b, &t.c})
            os << "      vertex " << v->x << ' ' << v->y << ' ' << v->z << '\n';
        os << "    endloop\n  endfacet\n";
    }
    os << "endsolid " << name << '\n';
    os.precision(old_precision);
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
