//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/analysis/EnhancementReport.hh
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "AreaBudget.hh"
#include "RateFit.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
struct ModeEnhancement
{
    AreaMode mode;
    double gamma_s;
    double eta;
    double stderr_eta;
    bool negative_numerator;
};

struct SampleEnhancement
{
    std::string label;
    double gamma;
    double stderr_gamma;
    double ratio;  //!< gamma / gamma_1
    double stderr_ratio;
    std::vector<ModeEnhancement> modes;
};

/*!
 * Pumping coefficients relative to the flat reference.
 *
 * Uncertainties follow first-order propagation of the fit standard errors,
 * treating the sample and reference fits as independent.
 */
struct EnhancementReport
{
    std::string reference;
    double gamma_1{0};
    double stderr_gamma_1{0};
    double gamma_1s{0};
    AreaBudget budget;
    std::vector<SampleEnhancement> samples;
};

//! Area modes evaluated per sample label; unlisted samples use every mode
using ModeSelection = std::map<std::string, std::vector<AreaMode>>;

EnhancementReport enhancement_report(std::vector<RateFit> const& fits,
                                     std::string const& reference_label,
                                     AreaBudget const& budget,
                                     ModeSelection const& selection = {});

nlohmann::json to_json(EnhancementReport const& report);
EnhancementReport enhancement_report_from_json(nlohmann::json const& j);

//! One row per (sample, mode): label,mode,ratio,stderr_ratio,gamma_s,eta,...
void write_eta_csv(std::ostream& os, EnhancementReport const& report);

//---------------------------------------------------------------------------//
}  // namespace getterflow
