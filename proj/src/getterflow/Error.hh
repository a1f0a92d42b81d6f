//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/Error.hh
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace getterflow
{
//---------------------------------------------------------------------------//
//! Base class for all library errors
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Input violates a documented precondition (bad spec, bad config)
class InvalidInput : public Error
{
  public:
    using Error::Error;
};

//! Malformed input file, with an optional 1-based line number
class ParseError : public Error
{
  public:
    ParseError(std::string const& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what)
        , line_(line)
    {
    }

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

//! A numerical result is unreliable or a geometry is inconsistent
class RuntimeFault : public Error
{
  public:
    using Error::Error;
};

//---------------------------------------------------------------------------//
}  // namespace getterflow

//! Throw InvalidInput unless the condition holds
#define GF_VALIDATE(COND, MSG)                       \
    do                                               \
    {                                                \
        if (!(COND))                                 \
        {                                            \
            throw ::getterflow::InvalidInput((MSG)); \
        }                                            \
    } while (0)
