//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/cli/Commands.cc
//---------------------------------------------------------------------------//
#include "Commands.hh"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "getterflow/Error.hh"
#include "getterflow/NumberFormat.hh"
#include "getterflow/analysis/EnhancementReport.hh"
#include "getterflow/analysis/PressureSeries.hh"
#include "getterflow/analysis/RateFit.hh"
#include "getterflow/analysis/Rates.hh"
#include "getterflow/geometry/GeometryConfig.hh"
#include "getterflow/stats/Capture.hh"
#include "getterflow/sweep/Sweep.hh"
#include "getterflow/tracer/Tracer.hh"

namespace fs = std::filesystem;
using nlohmann::json;

namespace getterflow
{
namespace
{
//---------------------------------------------------------------------------//
void write_file(fs::path const& path, std::string const& contents)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw RuntimeFault("cannot write '" + path.string() + "'");
    os << contents;
    if (!os)
        throw RuntimeFault("failed writing '" + path.string() + "'");
}

void write_json(fs::path const& path, json const& j)
{
    write_file(path, j.dump(2) + "\n");
}

template<class F>
std::string to_string_with(F&& f)
{
    std::ostringstream os;
    f(os);
    return os.str();
}

fs::path resolve(fs::path const& base, std::string const& p)
{
    fs::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

std::string fixed3(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

void check_format(std::string const& format)
{
    GF_VALIDATE(format == "csv" || format == "json", "format must be csv or json");
}

json with_header(json body, char const* command)
{
    body["schema"] = config_schema_version;
    body["command"] = command;
    return body;
}

std::vector<EmissionModel> parse_models(json const& config)
{
    std::vector<EmissionModel> models;
    for (auto const& m : config.value("models", json::array({"cosine"})))
        models.push_back(emission_model_from_string(m.get<std::string>().c_str()));
    GF_VALIDATE(!models.empty(), "no emission models given");
    return models;
}

json models_json(std::vector<EmissionModel> const& models)
{
    json j = json::array();
    for (auto m : models)
        j.push_back(to_cstring(m));
    return j;
}

//---------------------------------------------------------------------------//
struct PsGrid
{
    double min{1e-4};
    double max{1};
    std::size_t points{25};
};

PsGrid parse_ps_grid(json const& config)
{
    PsGrid grid;
    if (auto iter = config.find("p_s_grid"); iter != config.end())
    {
        check_keys(*iter, {"min", "max", "points"}, "p_s_grid");
        grid.min = iter->value("min", grid.min);
        grid.max = iter->value("max", grid.max);
        grid.points = iter->value("points", grid.points);
    }
    GF_VALIDATE(grid.min > 0 && grid.max <= 1 && grid.min <= grid.max && grid.points >= 1,
                "p_s_grid must satisfy 0 < min <= max <= 1");
    return grid;
}

//---------------------------------------------------------------------------//
LogFormat parse_log_format(json const& j)
{
    check_keys(j,
               {"delimiter", "time_column", "pressure_column", "time_name", "pressure_name",
                "time_scale", "pressure_scale"},
               "log format");
    LogFormat fmt;
    if (j.contains("delimiter"))
    {
        auto d = j.at("delimiter").get<std::string>();
        if (d == "\\t" || d == "tab")
            fmt.delimiter = '\t';
        else if (d.empty() || d == "auto")
            fmt.delimiter = '\0';
        else
        {
            GF_VALIDATE(d.size() == 1, "delimiter must be a single character");
            fmt.delimiter = d[0];
        }
    }
    fmt.time_column = j.value("time_column", fmt.time_column);
    fmt.pressure_column = j.value("pressure_column", fmt.pressure_column);
    if (j.contains("time_name"))
        fmt.time_name = j.at("time_name").get<std::string>();
    if (j.contains("pressure_name"))
        fmt.pressure_name = j.at("pressure_name").get<std::string>();
    fmt.time_scale = j.value("time_scale", fmt.time_scale);
    fmt.pressure_scale = j.value("pressure_scale", fmt.pressure_scale);
    return fmt;
}

struct LogEntry
{
    std::string label;
    fs::path path;
    json format;
    std::vector<AreaMode> modes;
};

LogEntry parse_log_entry(json const& j, fs::path const& base_dir, json const& default_format)
{
    check_keys(j, {"label", "log", "format", "modes"}, "log entry");
    LogEntry entry;
    GF_VALIDATE(j.contains("label") && j.contains("log"), "log entries need label and log");
    entry.label = j.at("label").get<std::string>();
    entry.path = fs::absolute(resolve(base_dir, j.at("log").get<std::string>()));
    entry.format = j.value("format", default_format);
    for (auto const& m : j.value("modes", json::array()))
        entry.modes.push_back(area_mode_from_string(m.get<std::string>()));
    return entry;
}

json log_entry_json(LogEntry const& e)
{
    json j{{"label", e.label}, {"log", e.path.string()}, {"format", e.format}};
    if (!e.modes.empty())
    {
        json modes = json::array();
        for (auto m : e.modes)
            modes.push_back(to_cstring(m));
        j["modes"] = modes;
    }
    return j;
}

AreaBudget parse_areas(json const& j)
{
    check_keys(j, {"a_r", "a_s", "a_p", "a_v"}, "areas_mm2");
    AreaBudget b{j.at("a_r").get<double>(), j.at("a_s").get<double>(),
                 j.at("a_p").get<double>(), j.at("a_v").get<double>()};
    b.validate();
    return b;
}

json areas_json(AreaBudget const& b)
{
    return {{"a_r", b.a_r}, {"a_s", b.a_s}, {"a_p", b.a_p}, {"a_v", b.a_v}};
}

json error_json(char const* kind, std::string const& message)
{
    return {{"error", {{"kind", kind}, {"message", message}}}};
}
}  // namespace

//---------------------------------------------------------------------------//
unsigned default_workers()
{
    if (char const* env = std::getenv("GETTERFLOW_WORKERS"))
    {
        char* end = nullptr;
        unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            return static_cast<unsigned>(value);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

json load_config(fs::path const& path)
{
    std::ifstream is(path);
    if (!is)
        throw InvalidInput("cannot open config '" + path.string() + "'");
    json config;
    try
    {
        config = json::parse(is);
    }
    catch (json::parse_error const& e)
    {
        throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
    }
    GF_VALIDATE(config.is_object(), "config must be a JSON object");
    GF_VALIDATE(config.contains("schema"), "config lacks a 'schema' version");
    GF_VALIDATE(config.at("schema").is_number_integer()
                    && config.at("schema").get<int>() == config_schema_version,
                "unsupported config schema version");
    return config;
}

//---------------------------------------------------------------------------//
void cmd_simulate(json const& config,
                  CommandOptions const& opts,
                  fs::path const& base_dir,
                  std::ostream& log)
{
    check_keys(config,
               {"schema", "command", "geometry", "models", "n_particles", "seed",
                "max_collisions", "p_s_grid", "trapped_threshold"},
               "simulate config");
    check_format(opts.format);
    GF_VALIDATE(config.contains("geometry"), "simulate config needs a geometry");
    auto geo = geometry_from_json(config.at("geometry"), base_dir);
    auto models = parse_models(config);
    std::uint64_t n = opts.particles.value_or(config.value("n_particles", std::uint64_t{100000}));
    std::uint64_t seed = opts.seed.value_or(config.value("seed", std::uint64_t{1}));
    auto max_coll = config.value("max_collisions", default_max_collisions);
    double trapped_threshold = config.value("trapped_threshold", default_trapped_threshold);
    auto grid = parse_ps_grid(config);

    json resolved{{"geometry", geo.resolved},
                  {"models", models_json(models)},
                  {"n_particles", n},
                  {"seed", seed},
                  {"max_collisions", max_coll},
                  {"p_s_grid", {{"min", grid.min}, {"max", grid.max}, {"points", grid.points}}},
                  {"trapped_threshold", trapped_threshold}};
    write_json(opts.out / "resolved_config.json", with_header(resolved, "simulate"));

    auto p_s_values = log_spaced(grid.min, grid.max, grid.points);
    for (auto model : models)
    {
        auto hist = run_simulation(geo.geometry, model, n, seed, max_coll, opts.workers);
        if (hist.faults > 0)
        {
            throw RuntimeFault(std::to_string(hist.faults)
                               + " particle(s) escaped the geometry; first index "
                               + std::to_string(hist.fault_particles.front()));
        }
        std::string name = to_cstring(model);
        write_json(opts.out / ("histogram_" + name + ".json"),
                   histogram_to_json(hist, geo.geometry.descriptor(), model));
        auto summary = summarize(hist, p_s_values, trapped_threshold);

        if (opts.format == "csv")
        {
            write_file(opts.out / ("pe_table_" + name + ".csv"), to_string_with([&](auto& os) {
                           os << "p_s,p_e,enhancement\n";
                           for (auto [p, pe] : summary.p_e_table)
                           {
                               os << format_double(p) << ',' << format_double(pe) << ','
                                  << format_double(pe / p) << '\n';
                           }
                       }));
        }
        else
        {
            json rows = json::array();
            for (auto [p, pe] : summary.p_e_table)
                rows.push_back({{"p_s", p}, {"p_e", pe}, {"enhancement", pe / p}});
            write_json(opts.out / ("pe_table_" + name + ".json"), rows);
        }
        log << name << ": mean_n = " << fixed3(summary.mean_n)
            << " stderr = " << fixed3(summary.stderr_mean_n) << " particles = " << hist.total
            << " trapped = " << hist.trapped << '\n';
    }
}

//---------------------------------------------------------------------------//
void cmd_sweep(json const& config,
               CommandOptions const& opts,
               fs::path const& base_dir,
               std::ostream& log)
{
    check_keys(config, {"schema", "command", "sweep"}, "sweep config");
    check_format(opts.format);
    GF_VALIDATE(config.contains("sweep"), "sweep config needs a 'sweep' object");
    json sweep_json = config.at("sweep");
    if (opts.seed)
        sweep_json["seed"] = *opts.seed;
    if (opts.particles)
        sweep_json["n_particles"] = *opts.particles;
    auto spec = sweep_spec_from_json(sweep_json);
    // Make height-map file references absolute so the echo is portable
    if (spec.family == SweepFamily::heightmap_stretch)
    {
        for (char const* key : {"csv", "pgm", "sidecar"})
        {
            if (spec.base.contains(key))
            {
                spec.base[key] = fs::absolute(resolve(base_dir, spec.base[key].get<std::string>()))
                                     .string();
            }
        }
    }
    write_json(opts.out / "resolved_config.json", with_header({{"sweep", to_json(spec)}}, "sweep"));

    auto table = run_sweep(spec, opts.workers, base_dir, [&log](SweepRow const& row) {
        log << to_cstring(row.model) << ": ";
        if (row.error)
            log << "error: " << *row.error << '\n';
        else
            log << "mean_n = " << fixed3(row.mean_n) << " stderr = " << fixed3(row.stderr_mean_n)
                << '\n';
    });

    if (opts.format == "csv")
    {
        write_file(opts.out / "sweep.csv",
                   to_string_with([&](auto& os) { write_sweep_csv(os, table); }));
    }
    else
    {
        json rows = json::array();
        for (auto const& row : table.rows)
        {
            json r{{"family", to_cstring(table.family)}};
            for (std::size_t i = 0; i < table.param_names.size(); ++i)
                r[table.param_names[i]] = row.params[i];
            r["model"] = to_cstring(row.model);
            r["mean_n"] = row.mean_n;
            r["stderr"] = row.stderr_mean_n;
            r["trapped_fraction"] = row.trapped_fraction;
            r["n_particles"] = row.n_particles;
            r["seed"] = row.seed;
            r["error"] = row.error ? json(*row.error) : json(nullptr);
            rows.push_back(r);
        }
        write_json(opts.out / "sweep.json", rows);
    }
    if (opts.plot)
    {
        write_file(opts.out / "sweep.svg",
                   to_string_with([&](auto& os) { write_sweep_svg(os, table); }));
    }
    std::size_t failed = 0;
    for (auto const& row : table.rows)
        failed += row.error ? 1 : 0;
    log << table.rows.size() << " rows, " << failed << " failed\n";
    if (failed > 0)
        throw RuntimeFault(std::to_string(failed) + " sweep row(s) failed");
}

//---------------------------------------------------------------------------//
void cmd_analyze(json const& config,
                 CommandOptions const& opts,
                 fs::path const& base_dir,
                 std::ostream& log)
{
    check_keys(config,
               {"schema", "command", "samples", "control", "reference", "format",
                "threshold_mbar", "grid_points", "smooth", "smooth_half_window", "areas_mm2"},
               "analyze config");
    check_format(opts.format);
    if (!config.contains("control"))
        throw InvalidInput("analyze config lacks the uncoated control log ('control')");
    if (!config.contains("reference"))
        throw InvalidInput("analyze config lacks the flat reference log ('reference')");
    GF_VALIDATE(config.contains("samples") && config.at("samples").is_array()
                    && !config.at("samples").empty(),
                "analyze config needs at least one coated sample");
    GF_VALIDATE(config.contains("areas_mm2"), "analyze config needs 'areas_mm2'");

    json default_format = config.value("format", json::object());
    auto control = parse_log_entry(config.at("control"), base_dir, default_format);
    auto reference = parse_log_entry(config.at("reference"), base_dir, default_format);
    std::vector<LogEntry> samples;
    for (auto const& s : config.at("samples"))
        samples.push_back(parse_log_entry(s, base_dir, default_format));
    auto budget = parse_areas(config.at("areas_mm2"));
    double threshold = opts.threshold.value_or(
        config.value("threshold_mbar", default_threshold_mbar));
    int grid_points = config.value("grid_points", 40);
    DerivativeOptions deriv;
    deriv.smooth = config.value("smooth", false);
    deriv.half_window = config.value("smooth_half_window", deriv.half_window);

    std::vector<LogEntry> coated{reference};
    coated.insert(coated.end(), samples.begin(), samples.end());
    for (std::size_t i = 0; i < coated.size(); ++i)
    {
        GF_VALIDATE(coated[i].label != control.label, "sample labels must differ from control");
        for (std::size_t k = 0; k < i; ++k)
            GF_VALIDATE(coated[i].label != coated[k].label, "sample labels must be unique");
    }

    json sample_list = json::array();
    for (auto const& s : samples)
        sample_list.push_back(log_entry_json(s));
    json resolved{{"samples", sample_list},
                  {"control", log_entry_json(control)},
                  {"reference", log_entry_json(reference)},
                  {"threshold_mbar", threshold},
                  {"grid_points", grid_points},
                  {"smooth", deriv.smooth},
                  {"smooth_half_window", deriv.half_window},
                  {"areas_mm2", areas_json(budget)}};
    write_json(opts.out / "resolved_config.json", with_header(resolved, "analyze"));

    auto load = [threshold](LogEntry const& e) {
        auto series = load_pressure_log(e.path, parse_log_format(e.format));
        series.label = e.label;
        return truncate_at_threshold(series, threshold);
    };
    auto control_series = load(control);
    std::vector<PressureSeries> coated_series;
    for (auto const& e : coated)
        coated_series.push_back(load(e));

    std::vector<PressureSeries> all = coated_series;
    all.push_back(control_series);
    auto grid = common_grid(all, grid_points);

    auto control_rates = rate_vs_pressure(control_series, grid, deriv);
    std::vector<RateFit> fits;
    ModeSelection selection;
    json fits_json = json::array();
    for (std::size_t i = 0; i < coated.size(); ++i)
    {
        auto rates = rate_vs_pressure(coated_series[i], grid, deriv);
        auto net = subtract_control(rates, control_rates);
        for (auto const& w : net.warnings)
            log << "warning: " << w << '\n';
        write_file(opts.out / ("rates_" + coated[i].label + ".csv"), to_string_with([&](auto& os) {
                       os << "p_mbar,dpdt_sample,dpdt_control,dpdt_net\n";
                       for (std::size_t k = 0; k < net.size(); ++k)
                       {
                           os << format_double(net.pressure[k]) << ','
                              << format_double(rates.rate[k]) << ','
                              << format_double(control_rates.rate[k]) << ','
                              << format_double(net.rate[k]) << '\n';
                       }
                   }));
        auto fit = fit_gamma(net);
        fit.label = coated[i].label;
        write_json(opts.out / ("fit_" + coated[i].label + ".json"), to_json(fit));
        fits_json.push_back(to_json(fit));
        if (!coated[i].modes.empty())
            selection[coated[i].label] = coated[i].modes;
        log << fit.label << ": gamma = " << format_double(fit.gamma)
            << " 1/s stderr = " << format_double(fit.stderr_gamma) << '\n';
        fits.push_back(std::move(fit));
    }
    write_json(opts.out / "fits.json", fits_json);

    auto report = enhancement_report(fits, reference.label, budget, selection);
    write_json(opts.out / "report.json", to_json(report));
    if (opts.format == "csv")
        write_file(opts.out / "eta.csv", to_string_with([&](auto& os) { write_eta_csv(os, report); }));
    for (auto const& s : report.samples)
    {
        log << s.label << ": ratio = " << fixed3(s.ratio);
        for (auto const& m : s.modes)
        {
            log << ' ' << to_cstring(m.mode) << " eta = " << fixed3(m.eta);
            if (m.negative_numerator)
                log << " (negative numerator)";
        }
        log << '\n';
    }
}

//---------------------------------------------------------------------------//
namespace
{
json read_json_file(fs::path const& path, char const* what)
{
    std::ifstream is(path);
    if (!is)
        throw InvalidInput(std::string("cannot open ") + what + " '" + path.string() + "'");
    try
    {
        return json::parse(is);
    }
    catch (json::parse_error const& e)
    {
        throw InvalidInput(std::string(what) + " is not valid JSON: " + e.what());
    }
}
}  // namespace

//---------------------------------------------------------------------------//
void cmd_report(json const& config,
                CommandOptions const& opts,
                fs::path const& base_dir,
                std::ostream& log)
{
    check_keys(config,
               {"schema", "command", "histogram", "p_s_grid", "trapped_threshold", "fits",
                "reference", "areas_mm2", "modes"},
               "report config");
    check_format(opts.format);
    bool from_hist = config.contains("histogram");
    bool from_fits = config.contains("fits");
    GF_VALIDATE(from_hist != from_fits, "report config needs either 'histogram' or 'fits'");

    if (from_hist)
    {
        auto path = fs::absolute(resolve(base_dir, config.at("histogram").get<std::string>()));
        auto hj = read_json_file(path, "histogram");
        auto hist = histogram_from_json(hj);
        auto grid = parse_ps_grid(config);
        double trapped_threshold = config.value("trapped_threshold", default_trapped_threshold);
        json resolved{{"histogram", path.string()},
                      {"p_s_grid", {{"min", grid.min}, {"max", grid.max}, {"points", grid.points}}},
                      {"trapped_threshold", trapped_threshold}};
        write_json(opts.out / "resolved_config.json", with_header(resolved, "report"));

        auto summary = summarize(hist, log_spaced(grid.min, grid.max, grid.points),
                                 trapped_threshold);
        write_file(opts.out / "pe_table.csv", to_string_with([&](auto& os) {
                       os << "p_s,p_e,enhancement\n";
                       for (auto [p, pe] : summary.p_e_table)
                       {
                           os << format_double(p) << ',' << format_double(pe) << ','
                              << format_double(pe / p) << '\n';
                       }
                   }));
        log << "mean_n = " << fixed3(summary.mean_n) << " stderr = "
            << fixed3(summary.stderr_mean_n) << '\n';
        return;
    }

    GF_VALIDATE(config.contains("reference"), "report config lacks 'reference'");
    GF_VALIDATE(config.contains("areas_mm2"), "report config lacks 'areas_mm2'");
    // Inline array, or the path of a fits.json written by analyze
    json fits_json = config.at("fits");
    if (fits_json.is_string())
        fits_json = read_json_file(resolve(base_dir, fits_json.get<std::string>()), "fits");
    GF_VALIDATE(fits_json.is_array(), "'fits' must be an array or a path to one");
    std::vector<RateFit> fits;
    for (auto const& f : fits_json)
        fits.push_back(rate_fit_from_json(f));
    auto budget = parse_areas(config.at("areas_mm2"));
    auto reference = config.at("reference").get<std::string>();
    ModeSelection selection;
    if (config.contains("modes"))
    {
        for (auto const& [label, modes] : config.at("modes").items())
        {
            for (auto const& m : modes)
                selection[label].push_back(area_mode_from_string(m.get<std::string>()));
        }
    }
    write_json(opts.out / "resolved_config.json", with_header(config, "report"));
    auto report = enhancement_report(fits, reference, budget, selection);
    write_json(opts.out / "report.json", to_json(report));
    if (opts.format == "csv")
        write_file(opts.out / "eta.csv", to_string_with([&](auto& os) { write_eta_csv(os, report); }));
    for (auto const& s : report.samples)
    {
        log << s.label << ": ratio = " << fixed3(s.ratio);
        for (auto const& m : s.modes)
            log << ' ' << to_cstring(m.mode) << " eta = " << fixed3(m.eta);
        log << '\n';
    }
}

//---------------------------------------------------------------------------//
int run_command(std::string const& command,
                CommandOptions const& opts,
                std::ostream& log,
                std::ostream& err)
{
    try
    {
        auto config = load_config(opts.config);
        if (auto iter = config.find("command"); iter != config.end())
        {
            GF_VALIDATE(iter->get<std::string>() == command,
                        "config is for '" + iter->get<std::string>() + "', not '" + command
                            + "'");
        }
        auto base_dir = fs::absolute(opts.config).parent_path();
        if (command == "simulate")
            cmd_simulate(config, opts, base_dir, log);
        else if (command == "sweep")
            cmd_sweep(config, opts, base_dir, log);
        else if (command == "analyze")
            cmd_analyze(config, opts, base_dir, log);
        else if (command == "report")
            cmd_report(config, opts, base_dir, log);
        else
            throw InvalidInput("unknown command '" + command + "'");
        return exit_success;
    }
    catch (ParseError const& e)
    {
        err << error_json("parse", e.what()).dump() << '\n';
        return exit_config_error;
    }
    catch (InvalidInput const& e)
    {
        err << error_json("config", e.what()).dump() << '\n';
        return exit_config_error;
    }
    catch (json::exception const& e)
    {
        err << error_json("config", e.what()).dump() << '\n';
        return exit_config_error;
    }
    catch (RuntimeFault const& e)
    {
        err << error_json("runtime", e.what()).dump() << '\n';
        return exit_runtime_fault;
    }
    catch (std::exception const& e)
    {
        err << error_json("runtime", e.what()).dump() << '\n';
        return exit_runtime_fault;
    }
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
