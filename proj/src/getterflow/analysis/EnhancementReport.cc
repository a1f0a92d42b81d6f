//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/analysis/EnhancementReport.cc
//---------------------------------------------------------------------------//
#include "EnhancementReport.hh"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "getterflow/Error.hh"
#include "getterflow/NumberFormat.hh"

namespace getterflow
{
namespace
{
double or_nan(nlohmann::json const& j)
{
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}
}  // namespace

//---------------------------------------------------------------------------//
EnhancementReport enhancement_report(std::vector<RateFit> const& fits,
                                     std::string const& reference_label,
                                     AreaBudget const& budget,
                                     ModeSelection const& selection)
{
    budget.validate();
    auto ref = std::find_if(fits.begin(), fits.end(), [&](RateFit const& f) {
        return f.label == reference_label;
    });
    if (ref == fits.end())
        throw InvalidInput("flat reference '" + reference_label + "' missing from fits");
    GF_VALIDATE(ref->gamma > 0, "flat reference pumping coefficient must be positive");

    EnhancementReport report;
    report.reference = reference_label;
    report.gamma_1 = ref->gamma;
    report.stderr_gamma_1 = ref->stderr_gamma;
    report.gamma_1s = ref->gamma / budget.a_r;
    report.budget = budget;

    double const g1 = ref->gamma;
    double const s1 = ref->stderr_gamma;
    for (auto const& fit : fits)
    {
        if (&fit == &*ref)
            continue;
        SampleEnhancement row;
        row.label = fit.label;
        row.gamma = fit.gamma;
        row.stderr_gamma = fit.stderr_gamma;
        row.ratio = fit.gamma / g1;
        row.stderr_ratio = std::hypot(fit.stderr_gamma / g1, fit.gamma * s1 / (g1 * g1));

        std::vector<AreaMode> modes(std::begin(all_area_modes), std::end(all_area_modes));
        if (auto iter = selection.find(fit.label); iter != selection.end())
            modes = iter->second;
        for (AreaMode mode : modes)
        {
            auto pac = per_area_coefficient(fit.gamma, g1, budget, mode);
            double s_a = area_split(budget, mode).structured;
            double d_gi = budget.a_r / (s_a * g1);
            double d_g1 = -budget.a_r * fit.gamma / (s_a * g1 * g1);
            row.modes.push_back({mode, pac.gamma_s, pac.eta,
                                 std::hypot(d_gi * fit.stderr_gamma, d_g1 * s1),
                                 pac.negative_numerator});
        }
        report.samples.push_back(std::move(row));
    }
    return report;
}

//---------------------------------------------------------------------------//
nlohmann::json to_json(EnhancementReport const& report)
{
    nlohmann::json samples = nlohmann::json::array();
    for (auto const& s : report.samples)
    {
        nlohmann::json modes = nlohmann::json::array();
        for (auto const& m : s.modes)
        {
            modes.push_back({{"mode", to_cstring(m.mode)},
                             {"gamma_s", m.gamma_s},
                             {"eta", m.eta},
                             {"stderr_eta", m.stderr_eta},
                             {"negative_numerator", m.negative_numerator}});
        }
        samples.push_back({{"label", s.label},
                           {"gamma", s.gamma},
                           {"stderr_gamma", s.stderr_gamma},
                           {"ratio", s.ratio},
                           {"stderr_ratio", s.stderr_ratio},
                           {"modes", modes}});
    }
    auto const& b = report.budget;
    return {{"reference", report.reference},
            {"gamma_1", report.gamma_1},
            {"stderr_gamma_1", report.stderr_gamma_1},
            {"gamma_1s", report.gamma_1s},
            {"areas_mm2", {{"a_r", b.a_r}, {"a_s", b.a_s}, {"a_p", b.a_p}, {"a_v", b.a_v}}},
            {"samples", samples}};
}

EnhancementReport enhancement_report_from_json(nlohmann::json const& j)
{
    EnhancementReport report;
    report.reference = j.at("reference").get<std::string>();
    report.gamma_1 = j.at("gamma_1").get<double>();
    report.stderr_gamma_1 = or_nan(j.at("stderr_gamma_1"));
    report.gamma_1s = j.at("gamma_1s").get<double>();
    auto const& a = j.at("areas_mm2");
    report.budget = {a.at("a_r").get<double>(), a.at("a_s").get<double>(),
                     a.at("a_p").get<double>(), a.at("a_v").get<double>()};
    for (auto const& s : j.at("samples"))
    {
        SampleEnhancement row;
        row.label = s.at("label").get<std::string>();
        row.gamma = s.at("gamma").get<double>();
        row.stderr_gamma = or_nan(s.at("stderr_gamma"));
        row.ratio = s.at("ratio").get<double>();
        row.stderr_ratio = or_nan(s.at("stderr_ratio"));
        for (auto const& m : s.at("modes"))
        {
            row.modes.push_back({area_mode_from_string(m.at("mode").get<std::string>()),
                                 m.at("gamma_s").get<double>(),
                                 m.at("eta").get<double>(),
                                 or_nan(m.at("stderr_eta")),
                                 m.at("negative_numerator").get<bool>()});
        }
        report.samples.push_back(std::move(row));
    }
    return report;
}

void write_eta_csv(std::ostream& os, EnhancementReport const& report)
{
    os << "label,mode,ratio,stderr_ratio,gamma_s,eta,stderr_eta,negative_numerator\n";
    for (auto const& s : report.samples)
    {
        for (auto const& m : s.modes)
        {
            os << s.label << ',' << to_cstring(m.mode) << ',' << format_double(s.ratio)
               << ',' << format_double(s.stderr_ratio) << ',' << format_double(m.gamma_s)
               << ',' << format_double(m.eta) << ',' << format_double(m.stderr_eta) << ','
               << (m.negative_numerator ? "true" : "false") << '\n';
        }
    }
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
