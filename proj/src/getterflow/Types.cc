//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/Types.cc
//---------------------------------------------------------------------------//
#include "Types.hh"

#include <string>

#include "Error.hh"

namespace getterflow
{
//---------------------------------------------------------------------------//
char const* to_cstring(EmissionModel m)
{
    switch (m)
    {
        case EmissionModel::cosine_law:
            return "cosine";
        case EmissionModel::isotropic_half_space:
            return "isotropic";
    }
    return "unknown";
}

//---------------------------------------------------------------------------//
EmissionModel emission_model_from_string(char const* s)
{
    std::string str{s};
    if (str == "cosine" || str == "cosine_law")
        return EmissionModel::cosine_law;
    if (str == "isotropic" || str == "isotropic_half_space")
        return EmissionModel::isotropic_half_space;
    throw InvalidInput("unknown emission model '" + str + "'");
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
