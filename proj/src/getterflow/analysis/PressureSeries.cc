//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/analysis/PressureSeries.cc
//---------------------------------------------------------------------------//
#include "PressureSeries.hh"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "getterflow/Error.hh"
#include "getterflow/NumberFormat.hh"

namespace getterflow
{
namespace
{
std::string trim(std::string s)
{
    auto first = s.find_first_not_of(" \t\r\"");
    if (first == std::string::npos)
        return {};
    auto last = s.find_last_not_of(" \t\r\"");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(std::string const& line, char delimiter)
{
    std::vector<std::string> fields;
    if (delimiter != '\0')
    {
        std::string field;
        std::istringstream is(line);
        while (std::getline(is, field, delimiter))
            fields.push_back(trim(field));
        return fields;
    }
    std::string current;
    bool in_space = false;
    for (char c : line)
    {
        if (c == ',' || c == '\t' || c == ';')
        {
            fields.push_back(trim(current));
            current.clear();
            in_space = false;
        }
        else if (c == ' ' || c == '\r')
        {
            in_space = true;
        }
        else
        {
            if (in_space && !current.empty())
            {
                fields.push_back(trim(current));
                current.clear();
            }
            in_space = false;
            current.push_back(c);
        }
    }
    if (!current.empty())
        fields.push_back(trim(current));
    return fields;
}

std::optional<double> parse_double(std::string const& s)
{
    double value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return value;
}

std::size_t find_column(std::vector<std::string> const& header,
                        std::string const& name,
                        std::size_t lineno)
{
    auto iter = std::find(header.begin(), header.end(), name);
    if (iter == header.end())
        throw ParseError("column '" + name + "' not found in header", lineno);
    return static_cast<std::size_t>(iter - header.begin());
}
}  // namespace

//---------------------------------------------------------------------------//
void PressureSeries::validate() const
{
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        GF_VALIDATE(std::isfinite(samples[i].t) && std::isfinite(samples[i].p),
                    "pressure series contains non-finite values");
        GF_VALIDATE(samples[i].p > 0, "pressure series contains non-positive pressure");
        if (i > 0)
        {
            GF_VALIDATE(samples[i].t > samples[i - 1].t,
                        "pressure series times must be strictly increasing");
        }
    }
}

//---------------------------------------------------------------------------//
PressureSeries load_pressure_log(std::istream& is, LogFormat const& format, std::string label)
{
    PressureSeries series;
    series.label = std::move(label);

    std::size_t t_col = format.time_column;
    std::size_t p_col = format.pressure_column;
    bool need_names = format.time_name || format.pressure_name;
    bool first_data = true;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line))
    {
        ++lineno;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        auto fields = split_fields(stripped, format.delimiter);

        if (first_data)
        {
            first_data = false;
            bool numeric = std::all_of(fields.begin(), fields.end(), [](auto const& f) {
                return parse_double(f).has_value();
            });
            if (!numeric)
            {
                if (format.time_name)
                    t_col = find_column(fields, *format.time_name, lineno);
                if (format.pressure_name)
                    p_col = find_column(fields, *format.pressure_name, lineno);
                need_names = false;
                continue;
            }
            if (need_names)
                throw ParseError("column names requested but log has no header", lineno);
        }

        if (fields.size() <= std::max(t_col, p_col))
            throw ParseError("too few columns", lineno);
        auto t = parse_double(fields[t_col]);
        auto p = parse_double(fields[p_col]);
        if (!t || !p)
            throw ParseError("non-numeric time or pressure", lineno);
        double tv = *t * format.time_scale;
        double pv = *p * format.pressure_scale;
        if (!std::isfinite(tv) || !std::isfinite(pv))
            throw ParseError("non-finite time or pressure", lineno);
        if (!(pv > 0))
            throw ParseError("pressure must be positive", lineno);
        if (!series.samples.empty() && !(tv > series.samples.back().t))
            throw ParseError("time is not strictly increasing", lineno);
        series.samples.push_back({tv, pv});
    }
    if (series.samples.empty())
        throw ParseError("pressure log contains no data rows");
    return series;
}

PressureSeries load_pressure_log(std::filesystem::path const& path, LogFormat const& format)
{
    std::ifstream is(path);
    if (!is)
        throw ParseError("cannot open pressure log '" + path.string() + "'");
    return load_pressure_log(is, format, path.stem().string());
}

void write_pressure_log(std::ostream& os, PressureSeries const& series)
{
    os << "t_s,p_mbar\n";
    for (auto const& s : series.samples)
        os << format_double(s.t) << ',' << format_double(s.p) << '\n';
}

//---------------------------------------------------------------------------//
PressureSeries truncate_at_threshold(PressureSeries const& series, double threshold)
{
    GF_VALIDATE(!series.empty(), "cannot truncate an empty pressure series");
    GF_VALIDATE(threshold > 0, "truncation threshold must be positive");
    auto const& s = series.samples;
    auto spike = std::max_element(
        s.begin(), s.end(), [](auto const& a, auto const& b) { return a.p < b.p; });
    auto start = std::find_if(spike, s.end(), [threshold](auto const& x) {
        return x.p <= threshold;
    });
    if (start == s.end())
    {
        throw RuntimeFault("pressure of '" + series.label
                           + "' never declines below the truncation threshold");
    }
    PressureSeries result;
    result.label = series.label;
    result.samples.assign(start, s.end());
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
