//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/NumberFormat.hh
//---------------------------------------------------------------------------//
#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace getterflow
{
//---------------------------------------------------------------------------//
//! Shortest representation that parses back to the same double
inline std::string format_double(double value)
{
    if (std::isnan(value))
        return "nan";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
