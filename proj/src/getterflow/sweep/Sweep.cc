//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/sweep/Sweep.cc
//---------------------------------------------------------------------------//
#include "Sweep.hh"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "getterflow/Error.hh"
#include "getterflow/NumberFormat.hh"
#include "getterflow/geometry/GeometryConfig.hh"
#include "getterflow/sampler/RngStream.hh"
#include "getterflow/stats/Capture.hh"

namespace getterflow
{
namespace
{
//---------------------------------------------------------------------------//
std::vector<std::string> param_names(SweepFamily family)
{
    switch (family)
    {
        case SweepFamily::polygon_pocket:
            return {"sides", "side_length", "theta_deg", "truncation_ratio"};
        case SweepFamily::cone_array:
            return {"pitch", "base_radius", "theta_deg", "truncation_ratio"};
        case SweepFamily::heightmap_stretch:
            return {"outline_side", "side_to_depth"};
    }
    return {};
}

std::uint64_t fnv1a(std::string const& s)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s)
    {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

//! Geometry plus the parameter values recorded in the table
struct RowSetup
{
    Geometry geometry;
    std::vector<double> params;
};

RowSetup setup_row(SweepSpec const& spec,
                   double value,
                   std::optional<HeightMap> const& base_map)
{
    switch (spec.family)
    {
        case SweepFamily::polygon_pocket: {
            auto j = spec.base;
            if (spec.parameter == "sides")
                j["sides"] = static_cast<int>(value);
            else
                j[spec.parameter] = value;
            auto p = polygon_pocket_from_json(j);
            return {build_polygon_pocket(p),
                    {static_cast<double>(p.sides), p.top_side_length, p.theta_deg,
                     p.truncation_ratio}};
        }
        case SweepFamily::cone_array: {
            auto j = spec.base;
            j[spec.parameter] = value;
            auto c = cone_array_from_json(j);
            return {build_cone_array(c), {c.pitch, c.base_radius, c.theta_deg, c.truncation_ratio}};
        }
        case SweepFamily::heightmap_stretch: {
            auto map = stretch_heightmap(*base_map, value);
            double side = map.outline_side;
            return {build_heightmap(std::move(map)), {side, value}};
        }
    }
    throw InvalidInput("invalid sweep family");
}
}  // namespace

//---------------------------------------------------------------------------//
char const* to_cstring(SweepFamily family)
{
    switch (family)
    {
        case SweepFamily::polygon_pocket:
            return "polygon_pocket";
        case SweepFamily::cone_array:
            return "cone_array";
        case SweepFamily::heightmap_stretch:
            return "heightmap_stretch";
    }
    return "?";
}

SweepFamily sweep_family_from_string(std::string const& name)
{
    for (auto f : {SweepFamily::polygon_pocket, SweepFamily::cone_array,
                   SweepFamily::heightmap_stretch})
    {
        if (name == to_cstring(f))
            return f;
    }
    throw InvalidInput("unknown sweep family '" + name + "'");
}

//---------------------------------------------------------------------------//
void SweepSpec::validate() const
{
    GF_VALIDATE(!values.empty(), "sweep value list is empty");
    GF_VALIDATE(!models.empty(), "sweep has no emission models");
    GF_VALIDATE(n_particles >= 1, "n_particles must be at least 1");
    GF_VALIDATE(max_collisions >= 1, "max_collisions must be at least 1");
    GF_VALIDATE(base.is_object(), "sweep base geometry must be an object");
    for (double v : values)
        GF_VALIDATE(std::isfinite(v), "sweep values must be finite");

    auto names = param_names(family);
    if (family == SweepFamily::heightmap_stretch)
    {
        GF_VALIDATE(parameter == "side_to_depth",
                    "height-map sweeps vary side_to_depth only");
    }
    else
    {
        GF_VALIDATE(std::find(names.begin(), names.end(), parameter) != names.end(),
                    "parameter '" + parameter + "' cannot be swept for "
                        + to_cstring(family));
    }
    if (parameter == "sides")
    {
        for (double v : values)
            GF_VALIDATE(v == std::floor(v), "side counts must be integers");
    }
}

SweepSpec sweep_spec_from_json(nlohmann::json const& j)
{
    check_keys(j,
               {"family", "parameter", "values", "base", "n_particles", "seed", "models",
                "max_collisions"},
               "sweep");
    SweepSpec spec;
    try
    {
        spec.family = sweep_family_from_string(j.at("family").get<std::string>());
        spec.parameter = j.value("parameter", spec.family == SweepFamily::heightmap_stretch
                                                  ? std::string{"side_to_depth"}
                                                  : spec.parameter);
        spec.values = j.at("values").get<std::vector<double>>();
        spec.base = j.value("base", nlohmann::json::object());
        spec.n_particles = j.value("n_particles",
                                   spec.family == SweepFamily::heightmap_stretch
                                       ? default_heightmap_particles
                                       : default_sweep_particles);
        spec.seed = j.value("seed", spec.seed);
        spec.max_collisions = j.value("max_collisions", spec.max_collisions);
        if (j.contains("models"))
        {
            spec.models.clear();
            for (auto const& m : j.at("models"))
                spec.models.push_back(emission_model_from_string(m.get<std::string>().c_str()));
        }
    }
    catch (nlohmann::json::exception const& e)
    {
        throw InvalidInput(std::string("malformed sweep config: ") + e.what());
    }
    spec.validate();
    return spec;
}

nlohmann::json to_json(SweepSpec const& spec)
{
    nlohmann::json models = nlohmann::json::array();
    for (auto m : spec.models)
        models.push_back(to_cstring(m));
    return {{"family", to_cstring(spec.family)},
            {"parameter", spec.parameter},
            {"values", spec.values},
            {"base", spec.base},
            {"n_particles", spec.n_particles},
            {"seed", spec.seed},
            {"models", models},
            {"max_collisions", spec.max_collisions}};
}

//---------------------------------------------------------------------------//
std::size_t SweepTable::varied_index() const
{
    auto iter = std::find(param_names.begin(), param_names.end(), varied);
    GF_VALIDATE(iter != param_names.end(), "varied parameter missing from table");
    return static_cast<std::size_t>(iter - param_names.begin());
}

std::uint64_t row_seed(SweepSpec const& spec, double value, EmissionModel model)
{
    std::uint64_t salt = mix64(static_cast<std::uint64_t>(spec.family) + 1);
    salt = mix64(salt ^ fnv1a(spec.parameter));
    salt = mix64(salt ^ std::bit_cast<std::uint64_t>(value == 0 ? 0.0 : value));
    salt = mix64(salt ^ (static_cast<std::uint64_t>(model) + 1));
    return derive_seed(spec.seed, salt);
}

SweepTable run_sweep(SweepSpec const& spec,
                     unsigned workers,
                     std::filesystem::path const& base_dir,
                     SweepProgress const& progress)
{
    spec.validate();
    SweepTable table;
    table.family = spec.family;
    table.varied = spec.parameter;
    table.param_names = param_names(spec.family);

    std::optional<HeightMap> base_map;
    std::optional<std::string> base_error;
    if (spec.family == SweepFamily::heightmap_stretch)
    {
        try
        {
            auto source = spec.base;
            source.erase("side_to_depth");
            base_map = heightmap_from_json(source, base_dir);
        }
        catch (std::exception const& e)
        {
            base_error = e.what();
        }
    }

    double const nan = std::numeric_limits<double>::quiet_NaN();
    for (double value : spec.values)
    {
        std::optional<RowSetup> setup;
        std::optional<std::string> setup_error = base_error;
        if (!setup_error)
        {
            try
            {
                setup = setup_row(spec, value, base_map);
            }
            catch (std::exception const& e)
            {
                setup_error = e.what();
            }
        }

        for (auto model : spec.models)
        {
            SweepRow row{{}, model, nan, nan, nan, spec.n_particles, row_seed(spec, value, model), {}};
            if (setup)
            {
                row.params = setup->params;
                try
                {
                    auto hist = run_simulation(setup->geometry, model, spec.n_particles,
                                               row.seed, spec.max_collisions, workers);
                    if (hist.faults > 0)
                    {
                        throw RuntimeFault(std::to_string(hist.faults)
                                           + " particle(s) escaped the geometry");
                    }
                    auto limit = enhancement_limit(hist);
                    row.mean_n = limit.value;
                    row.stderr_mean_n = limit.stderr_value;
                    row.trapped_fraction = hist.trapped_fraction();
                }
                catch (std::exception const& e)
                {
                    row.error = e.what();
                }
            }
            else
            {
                row.params.assign(table.param_names.size(), nan);
                row.params[table.varied_index()] = value;
                row.error = setup_error;
            }
            if (progress)
                progress(row);
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

//---------------------------------------------------------------------------//
void write_sweep_csv(std::ostream& os, SweepTable const& table)
{
    os << "family";
    for (auto const& name : table.param_names)
        os << ',' << name;
    os << ",model,mean_n,stderr,trapped_fraction,n_particles,seed,error\n";
    for (auto const& row : table.rows)
    {
        os << to_cstring(table.family);
        for (double p : row.params)
            os << ',' << format_double(p);
        os << ',' << to_cstring(row.model) << ',' << format_double(row.mean_n) << ','
           << format_double(row.stderr_mean_n) << ',' << format_double(row.trapped_fraction)
           << ',' << row.n_particles << ',' << row.seed
           << ',';
        if (row.error)
        {
            std::string msg = *row.error;
            std::replace(msg.begin(), msg.end(), '"', '\'');
            os << '"' << msg << '"';
        }
        os << '\n';
    }
}

//---------------------------------------------------------------------------//
namespace
{
std::vector<double> nice_ticks(double lo, double hi, int target = 6)
{
    double span = hi - lo;
    if (!(span > 0))
        return {lo};
    double raw = span / target;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
    {
        step = m * mag;
        if (step >= raw)
            break;
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step)
        ticks.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
    return ticks;
}

std::string tick_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}
}  // namespace

void write_sweep_svg(std::ostream& os, SweepTable const& table)
{
    constexpr double width = 640;
    constexpr double height = 440;
    constexpr double left = 70;
    constexpr double right = 20;
    constexpr double top = 20;
    constexpr double bottom = 60;
    double const plot_w = width - left - right;
    double const plot_h = height - top - bottom;

    std::size_t xi = table.varied_index();
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymax = 1;
    for (auto const& row : table.rows)
    {
        xmin = std::min(xmin, row.params[xi]);
        xmax = std::max(xmax, row.params[xi]);
        if (std::isfinite(row.mean_n))
            ymax = std::max(ymax, row.mean_n + row.stderr_mean_n);
    }
    if (!std::isfinite(xmin))
    {
        xmin = 0;
        xmax = 1;
    }
    if (xmax == xmin)
    {
        xmin -= 0.5;
        xmax += 0.5;
    }
    double ymin = 0;
    auto yt = nice_ticks(ymin, ymax * 1.05);
    ymax = std::max(ymax * 1.05, yt.back());
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return top + plot_h - (y - ymin) / (ymax - ymin) * plot_h; };

    std::string xlabel = table.varied == "theta_deg" ? "surface angle θ (deg)" : table.varied;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n"
       << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
       << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (double t : nice_ticks(xmin, xmax))
    {
        os << "<line x1=\"" << px(t) << "\" y1=\"" << top + plot_h << "\" x2=\"" << px(t)
           << "\" y2=\"" << top + plot_h + 5 << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << px(t) << "\" y=\"" << top + plot_h + 18
           << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t : yt)
    {
        os << "<line x1=\"" << left - 5 << "\" y1=\"" << py(t) << "\" x2=\"" << left
           << "\" y2=\"" << py(t) << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << left - 8 << "\" y=\"" << py(t) + 4
           << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    }
    os << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15
       << "\" text-anchor=\"middle\">" << xlabel << "</text>\n"
       << "<text x=\"18\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" "
       << "transform=\"rotate(-90 18 " << top + plot_h / 2 << ")\">pumping rate increase</text>\n";

    char const* colors[] = {"#1f77b4", "#d62728"};
    int legend = 0;
    for (auto model : {EmissionModel::cosine_law, EmissionModel::isotropic_half_space})
    {
        std::vector<std::pair<double, double>> pts;
        for (auto const& row : table.rows)
        {
            if (row.model == model && std::isfinite(row.mean_n))
                pts.emplace_back(row.params[xi], row.mean_n);
        }
        if (pts.empty())
            continue;
        std::stable_sort(pts.begin(), pts.end(),
                         [](auto const& a, auto const& b) { return a.first < b.first; });
        char const* color = colors[static_cast<int>(model)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (auto const& [x, y] : pts)
            os << px(x) << ',' << py(y) << ' ';
        os << "\"/>\n";
        for (auto const& [x, y] : pts)
        {
            os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\""
               << color << "\"/>\n";
        }
        double ly = top + 15 + 16 * legend++;
        os << "<line x1=\"" << left + plot_w - 110 << "\" y1=\"" << ly << "\" x2=\""
           << left + plot_w - 90 << "\" y2=\"" << ly << "\" stroke=\"" << color
           << "\" stroke-width=\"1.5\"/>\n"
           << "<text x=\"" << left + plot_w - 85 << "\" y=\"" << ly + 4 << "\">"
           << to_cstring(model) << "</text>\n";
    }
    os << "</g>\n</svg>\n";
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
