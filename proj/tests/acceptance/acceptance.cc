//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file acceptance/acceptance.cc
//! \brief One PASS/FAIL line per acceptance criterion
//!
//! Exits 0 once every criterion has been evaluated; with --strict any FAIL
//! gives a nonzero exit status.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "getterflow/Error.hh"
#include "getterflow/NumberFormat.hh"
#include "getterflow/Types.hh"
#include "getterflow/analysis/EnhancementReport.hh"
#include "getterflow/analysis/PressureSeries.hh"
#include "getterflow/analysis/RateFit.hh"
#include "getterflow/analysis/Rates.hh"
#include "getterflow/geometry/Geometry.hh"
#include "getterflow/geometry/HeightMap.hh"
#include "getterflow/sampler/RngStream.hh"
#include "getterflow/sampler/Sampler.hh"
#include "getterflow/stats/Capture.hh"
#include "getterflow/sweep/Sweep.hh"
#include "getterflow/tracer/Tracer.hh"
#include "oracles/TiledConeArray.hh"

using namespace getterflow;

namespace
{
//---------------------------------------------------------------------------//
constexpr std::uint64_t n_particles = 100'000;
constexpr std::uint32_t max_collisions = 10'000;
constexpr unsigned many_workers = 8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int digits = 3)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::string sci(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

struct Outcome
{
    bool pass;
    std::string detail;
};

struct Estimate
{
    double mean;
    double stderr_mean;
};

Estimate estimate(CollisionHistogram const& h)
{
    return {h.mean_n(), h.stderr_mean_n()};
}

std::string show(Estimate const& e)
{
    return fmt(e.mean) + "±" + fmt(e.stderr_mean);
}

double combined(Estimate const& a, Estimate const& b)
{
    return std::hypot(a.stderr_mean, b.stderr_mean);
}

//---------------------------------------------------------------------------//
// Results shared between criteria
struct Ledger
{
    struct Trapped
    {
        std::string what;
        double fraction;
    };
    std::vector<Trapped> trapped;
    std::vector<std::pair<std::string, bool>> determinism;

    CollisionHistogram run(std::string const& what,
                           Geometry const& geo,
                           EmissionModel model,
                           std::uint64_t seed)
    {
        auto h = run_simulation(geo, model, n_particles, seed, max_collisions, 1);
        trapped.push_back({what, h.trapped_fraction()});
        if (h.faults > 0)
            throw RuntimeFault(what + ": " + std::to_string(h.faults) + " geometry leak(s)");
        return h;
    }

    void check_workers(std::string const& what,
                       Geometry const& geo,
                       EmissionModel model,
                       std::uint64_t seed,
                       CollisionHistogram const& serial)
    {
        auto parallel = run_simulation(geo, model, n_particles, seed, max_collisions,
                                       many_workers);
        auto a = histogram_to_json(serial, geo.descriptor(), model).dump();
        auto b = histogram_to_json(parallel, geo.descriptor(), model).dump();
        determinism.push_back({what, a == b});
    }
};

Geometry hex_pocket(double theta_deg, double truncation = 0, int sides = 6)
{
    PolygonPocketSpec s;
    s.sides = sides;
    s.theta_deg = theta_deg;
    s.truncation_ratio = truncation;
    return build_polygon_pocket(s);
}

//---------------------------------------------------------------------------//
Outcome hex_theta10(Ledger& ledger)
{
    bool pass = true;
    std::string detail;
    for (auto model : {EmissionModel::cosine_law, EmissionModel::isotropic_half_space})
    {
        auto geo = hex_pocket(10);
        auto start = Clock::now();
        auto h = ledger.run(std::string("hex θ=10 ") + to_cstring(model), geo, model, 101);
        double elapsed = seconds_since(start);
        auto e = estimate(h);
        bool ok = e.mean >= 5.2 && e.mean <= 6.0 && elapsed < 60;
        pass = pass && ok;
        detail += std::string(to_cstring(model)) + " <n> = " + show(e) + " in "
                  + fmt(elapsed, 2) + " s; ";
        ledger.check_workers(std::string("criterion 1 ") + to_cstring(model), geo, model, 101, h);
    }
    return {pass, detail + "window [5.2, 6.0], limit 60 s"};
}

Outcome hex_theta1(Ledger& ledger)
{
    auto geo = hex_pocket(1);
    auto cos = estimate(ledger.run("hex θ=1 cosine", geo, EmissionModel::cosine_law, 102));
    auto iso = estimate(
        ledger.run("hex θ=1 isotropic", geo, EmissionModel::isotropic_half_space, 102));
    bool pass = cos.mean >= 7.5 && cos.mean <= 8.5 && iso.mean >= 6.5 && iso.mean <= 7.5;
    return {pass, "cosine <n> = " + show(cos) + " (window [7.5, 8.5]); isotropic <n> = "
                      + show(iso) + " (window [6.5, 7.5])"};
}

Outcome flat_identity()
{
    auto start = Clock::now();
    auto geo = build_flat();
    bool pass = true;
    for (auto model : {EmissionModel::cosine_law, EmissionModel::isotropic_half_space})
    {
        auto h = run_simulation(geo, model, n_particles, 103, max_collisions, 1);
        pass = pass && h.counts.size() == 1 && h.counts.begin()->first == 1
               && h.counts.begin()->second == n_particles && h.trapped == 0;
        for (double p : log_spaced(1e-12, 1.0, 25))
        {
            StickingProbability ps{p};
            pass = pass && effective_probability(h, ps) == p && enhancement(h, ps) == 1.0;
        }
        pass = pass && enhancement_limit(h).value == 1.0;
    }
    double elapsed = seconds_since(start);
    pass = pass && elapsed < 1.0;
    return {pass, "P(n) = δ(n,1), P_e = P_s and enhancement 1 over 25 sticking probabilities "
                  "for both models in " + fmt(elapsed, 3) + " s (limit 1 s)"};
}

Outcome theta_monotonic(Ledger& ledger)
{
    SweepSpec spec;
    spec.family = SweepFamily::polygon_pocket;
    spec.parameter = "theta_deg";
    spec.values = {1, 5, 10, 20, 30, 45, 60, 80};
    spec.base = {{"type", "polygon_pocket"}};
    spec.n_particles = n_particles;
    spec.seed = 104;
    spec.max_collisions = max_collisions;
    auto table = run_sweep(spec, 1);
    bool pass = true;
    std::string detail = "<n> =";
    for (std::size_t i = 0; i < table.rows.size(); ++i)
    {
        auto const& row = table.rows[i];
        if (row.error)
            return {false, "row " + std::to_string(i) + " failed: " + *row.error};
        ledger.trapped.push_back({"sweep θ=" + fmt(spec.values[i], 0), row.trapped_fraction});
        detail += " " + fmt(row.mean_n, 2);
        if (i > 0)
        {
            auto const& prev = table.rows[i - 1];
            double tol = 3 * std::hypot(row.stderr_mean_n, prev.stderr_mean_n);
            pass = pass && row.mean_n <= prev.mean_n + tol;
        }
    }

    auto csv = [](SweepTable const& t) {
        std::ostringstream os;
        write_sweep_csv(os, t);
        return os.str();
    };
    auto parallel = run_sweep(spec, many_workers);
    ledger.determinism.push_back({"criterion 4 sweep", csv(table) == csv(parallel)});
    return {pass, detail + " for θ = 1,5,10,20,30,45,60,80 (non-increasing within 3σ)"};
}

Outcome truncation(Ledger& ledger)
{
    auto model = EmissionModel::cosine_law;
    auto full = estimate(ledger.run("hex θ=20 t/h=0", hex_pocket(20, 0), model, 105));
    auto small = estimate(ledger.run("hex θ=20 t/h=0.05", hex_pocket(20, 0.05), model, 106));
    auto deep = estimate(ledger.run("hex θ=20 t/h=0.6", hex_pocket(20, 0.6), model, 107));
    double rel = std::abs(small.mean - full.mean) / full.mean;
    double drop = (full.mean - deep.mean) / combined(full, deep);
    bool pass = rel < 0.05 && drop > 3;
    return {pass, "t/h=0: " + show(full) + ", t/h=0.05: " + show(small) + " (" + fmt(100 * rel, 2)
                      + "% apart, limit 5%), t/h=0.6: " + show(deep) + " (" + fmt(drop, 1)
                      + "σ lower, need > 3σ)"};
}

Outcome polygon_sides(Ledger& ledger)
{
    std::vector<double> means;
    std::string detail = "<n> =";
    for (int sides = 3; sides <= 8; ++sides)
    {
        auto h = ledger.run("polygon " + std::to_string(sides) + " sides", hex_pocket(20, 0.2, sides),
                            EmissionModel::cosine_law, 108 + sides);
        means.push_back(h.mean_n());
        detail += " " + fmt(h.mean_n());
    }
    auto [lo, hi] = std::minmax_element(means.begin(), means.end());
    double mean = 0;
    for (double m : means)
        mean += m / means.size();
    double spread = (*hi - *lo) / mean;
    return {spread < 0.15, detail + " for sides 3..8; spread " + fmt(100 * spread, 2)
                               + "% of the mean (limit 15%)"};
}

Outcome heightmap_oracle(Ledger& ledger)
{
    PolygonPocketSpec s;
    s.theta_deg = 30;
    s.truncation_ratio = 0.2;
    auto model = EmissionModel::cosine_law;
    auto analytic = estimate(ledger.run("analytic θ=30 t/h=0.2", build_polygon_pocket(s), model, 120));
    auto map = rasterize_polygon_pocket(s, s.top_side_length / 100);
    auto raster = estimate(ledger.run("height map θ=30 t/h=0.2", build_heightmap(map), model, 121));
    double z = std::abs(analytic.mean - raster.mean) / combined(analytic, raster);
    return {z < 3, "analytic " + show(analytic) + ", height map " + show(raster) + " ("
                       + fmt(z, 2) + "σ apart, limit 3σ)"};
}

Outcome cone_wrap(Ledger& ledger)
{
    ConeArraySpec s;
    s.theta_deg = 20;
    s.truncation_ratio = 0.3;
    auto model = EmissionModel::cosine_law;
    auto geo = build_cone_array(s);
    auto cell_hist = ledger.run("cone cell θ=20 t/h=0.3", geo, model, 122);
    auto cell = estimate(cell_hist);
    ledger.check_workers("criterion 8 cone cell", geo, model, 122, cell_hist);

    // Same incident distribution, independent streams, explicit tiling
    test::TiledConeArray tiled(s, 5);
    double offset = geo.tolerance();
    CollisionHistogram th;
    for (std::uint64_t i = 0; i < n_particles; ++i)
    {
        RngStream rng(123, i);
        Ray ray = sample_incident(geo, rng);
        auto out = trace_from(tiled, offset, ray, model, rng, max_collisions);
        ++th.total;
        if (out.status == TraceOutcome::Status::exited)
            ++th.counts[out.collisions];
        else if (out.status == TraceOutcome::Status::trapped)
            ++th.trapped;
        else
            ++th.faults;
    }
    ledger.trapped.push_back({"tiled cones θ=20 t/h=0.3", th.trapped_fraction()});
    auto tile = estimate(th);
    double z = std::abs(cell.mean - tile.mean) / combined(cell, tile);
    return {z < 3 && th.faults == 0,
            "single cell " + show(cell) + ", 5×5 tiling " + show(tile) + " (" + fmt(z, 2)
                + "σ apart, limit 3σ; " + std::to_string(th.faults) + " leaks)"};
}

Outcome sampler_moments()
{
    constexpr std::uint64_t draws = 1'000'000;
    Vec3 normal = normalized({0.3, -0.5, 0.8});
    bool pass = true;
    std::string detail;
    for (auto [model, expect] : {std::pair{EmissionModel::cosine_law, 2.0 / 3},
                                 std::pair{EmissionModel::isotropic_half_space, 0.5}})
    {
        RngStream rng(124, static_cast<std::uint64_t>(model));
        double sum = 0;
        double sum2 = 0;
        for (std::uint64_t i = 0; i < draws; ++i)
        {
            double mu = dot(sample_emission(normal, model, rng), normal);
            sum += mu;
            sum2 += mu * mu;
        }
        double mean = sum / draws;
        double sigma = std::sqrt((sum2 / draws - mean * mean) / (draws - 1));
        double z = std::abs(mean - expect) / sigma;
        pass = pass && z < 3;
        detail += std::string(to_cstring(model)) + " <μ> = " + fmt(mean, 5) + " vs "
                  + fmt(expect, 5) + " (" + fmt(z, 2) + "σ); ";
    }
    return {pass, detail + "limit 3σ at 1e6 draws"};
}

double gaussian(RngStream& rng)
{
    double u1 = 1 - rng.uniform();
    double u2 = rng.uniform();
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * pi * u2);
}

Outcome fit_exactness()
{
    // Noise-free log: closed-form decay after a pump-down spike
    double const gamma = 2e-3;
    double const c = 4e-9;
    double const p0 = 2e-5;
    double const dt = 0.005;
    PressureSeries s;
    s.label = "synthetic";
    auto n = static_cast<std::size_t>(std::llround(1000 / dt));
    double eq = c / gamma;
    for (std::size_t i = 0; i <= n; ++i)
    {
        double t = static_cast<double>(i) * dt;
        s.samples.push_back({t, eq + (p0 - eq) * std::exp(-gamma * t)});
    }
    auto tr = truncate_at_threshold(s);
    auto fit = fit_gamma(rate_vs_pressure(tr, common_grid({tr})));
    double rel_gamma = std::abs(fit.gamma - gamma) / gamma;
    double rel_c = std::abs(fit.c - c) / c;
    bool exact = rel_gamma < 1e-10 && rel_c < 1e-10;

    // 1% additive noise on the rates, 50 points, 1000 trials
    auto grid = geometric_grid(tr.samples.back().p, tr.samples.front().p, 50);
    double mean_y = 0;
    for (double p : grid)
        mean_y += (gamma * p - c) / grid.size();
    int cover_gamma = 0;
    int cover_c = 0;
    int const trials = 1000;
    for (int trial = 0; trial < trials; ++trial)
    {
        RngStream rng(125, trial);
        std::vector<std::pair<double, double>> pts;
        for (double p : grid)
            pts.push_back({p, gamma * p - c + 0.01 * mean_y * gaussian(rng)});
        auto f = fit_gamma(pts);
        cover_gamma += std::abs(f.gamma - gamma) <= 3 * f.stderr_gamma;
        cover_c += std::abs(f.c - c) <= 3 * f.stderr_c;
    }
    bool covered = cover_gamma >= 990 && cover_c >= 990;
    return {exact && covered,
            "noise-free relative error γ " + sci(rel_gamma) + ", C " + sci(rel_c)
                + " (limit 1e-10); 3σ coverage with 1% noise γ " + std::to_string(cover_gamma)
                + "/1000, C " + std::to_string(cover_c) + "/1000 (need ≥ 990)"};
}

Outcome table_one()
{
    auto start = Clock::now();
    auto fit = [](std::string label, double gamma) {
        RateFit f{};
        f.label = std::move(label);
        f.gamma = gamma;
        f.stderr_gamma = 0;
        f.n_points = 40;
        return f;
    };
    std::vector<RateFit> fits{fit("1", 1.10e-3), fit("2", 2.50e-3), fit("3", 3.27e-3)};
    ModeSelection modes{{"2", {AreaMode::plain, AreaMode::pocket_only}},
                        {"3", {AreaMode::sample3_min, AreaMode::sample3_max}}};
    auto report = enhancement_report(fits, "1", AreaBudget{1134, 726, 508, 354}, modes);
    double elapsed = seconds_since(start);

    auto const& s2 = report.samples.at(0);
    auto const& s3 = report.samples.at(1);
    struct Check
    {
        char const* name;
        double value;
        double expect;
    };
    std::vector<Check> checks{{"γ2/γ1", s2.ratio, 2.3},
                              {"γ3/γ1", s3.ratio, 3.0},
                              {"η2", s2.modes.at(0).eta, 3.0},
                              {"η2*", s2.modes.at(1).eta, 3.8},
                              {"η3 min", s3.modes.at(0).eta, 2.7},
                              {"η3 max", s3.modes.at(1).eta, 3.6}};
    bool pass = elapsed < 1.0;
    std::string detail;
    for (auto const& c : checks)
    {
        pass = pass && std::abs(c.value - c.expect) <= 0.05;
        detail += std::string(c.name) + " = " + fmt(c.value) + " (" + fmt(c.expect, 1) + "); ";
    }
    return {pass, detail + "tolerance 0.05, " + fmt(elapsed * 1e3, 2) + " ms"};
}

Outcome flux_conservation(Ledger const& ledger)
{
    double worst = 0;
    std::string where = "none";
    for (auto const& t : ledger.trapped)
    {
        if (!(t.fraction <= worst))
        {
            worst = t.fraction;
            where = t.what;
        }
    }
    return {worst < 1e-4, "largest trapped fraction " + sci(worst) + " (" + where + ") over "
                              + std::to_string(ledger.trapped.size())
                              + " runs at max_collisions = 10000 (limit 1e-4)"};
}

Outcome determinism(Ledger const& ledger)
{
    bool pass = !ledger.determinism.empty();
    std::string detail;
    for (auto const& [what, same] : ledger.determinism)
    {
        pass = pass && same;
        detail += what + (same ? " identical; " : " DIFFERS; ");
    }
    return {pass, detail + "1 vs " + std::to_string(many_workers) + " workers"};
}

//---------------------------------------------------------------------------//
}  // namespace

int main(int argc, char** argv)
{
    bool strict = false;
    for (int i = 1; i < argc; ++i)
    {
        if (std::strcmp(argv[i], "--strict") == 0)
        {
            strict = true;
        }
        else
        {
            std::fprintf(stderr, "usage: %s [--strict]\n", argv[0]);
            return 2;
        }
    }

    Ledger ledger;
    struct Criterion
    {
        int id;
        char const* title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "hexagonal pocket at θ=10°", [&] { return hex_theta10(ledger); }},
        {2, "small-angle plateau at θ=1°", [&] { return hex_theta1(ledger); }},
        {3, "flat identity", [] { return flat_identity(); }},
        {4, "θ monotonicity", [&] { return theta_monotonic(ledger); }},
        {5, "truncation behavior", [&] { return truncation(ledger); }},
        {6, "polygon-side insensitivity", [&] { return polygon_sides(ledger); }},
        {7, "height-map oracle", [&] { return heightmap_oracle(ledger); }},
        {8, "periodic-wrap oracle", [&] { return cone_wrap(ledger); }},
        {9, "sampler moments", [] { return sampler_moments(); }},
        {10, "rate-equation fit exactness", [] { return fit_exactness(); }},
        {11, "per-area enhancement table", [] { return table_one(); }},
        {12, "flux conservation", [&] { return flux_conservation(ledger); }},
        {13, "worker-count determinism", [&] { return determinism(ledger); }},
    };

    int failures = 0;
    for (auto const& c : criteria)
    {
        Outcome out;
        try
        {
            out = c.run();
        }
        catch (std::exception const& e)
        {
            out = {false, std::string("error: ") + e.what()};
        }
        failures += !out.pass;
        std::printf("%s %2d %s: %s\n", out.pass ? "PASS" : "FAIL", c.id, c.title,
                    out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return strict && failures > 0 ? 1 : 0;
}
