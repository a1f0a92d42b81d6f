//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/sampler/RngStream.cc
//---------------------------------------------------------------------------//
#include "RngStream.hh"

namespace getterflow
{
namespace
{
constexpr std::uint32_t philox_m0 = 0xD2511F53u;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi)
{
    std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(product);
    hi = static_cast<std::uint32_t>(product >> 32);
}
}  // namespace

//---------------------------------------------------------------------------//
Philox4x32::Block Philox4x32::generate(Block ctr, Key key)
{
    for (int round = 0; round < 10; ++round)
    {
        std::uint32_t lo0, hi0, lo1, hi1;
        mulhilo(philox_m0, ctr[0], lo0, hi0);
        mulhilo(philox_m1, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += philox_w0;
        key[1] += philox_w1;
    }
    return ctr;
}

//---------------------------------------------------------------------------//
RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id)
{
}

std::uint64_t RngStream::next_u64()
{
    if (used_ == 2)
    {
        Philox4x32::Block ctr{static_cast<std::uint32_t>(block_),
                              static_cast<std::uint32_t>(block_ >> 32),
                              static_cast<std::uint32_t>(stream_id_),
                              static_cast<std::uint32_t>(stream_id_ >> 32)};
        Philox4x32::Key key{static_cast<std::uint32_t>(seed_),
                            static_cast<std::uint32_t>(seed_ >> 32)};
        buffer_ = Philox4x32::generate(ctr, key);
        ++block_;
        used_ = 0;
    }
    std::uint64_t lo = buffer_[2 * used_];
    std::uint64_t hi = buffer_[2 * used_ + 1];
    ++used_;
    return (hi << 32) | lo;
}

double RngStream::uniform()
{
    return static_cast<double>(this->next_u64() >> 11) * 0x1.0p-53;
}

//---------------------------------------------------------------------------//
std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt)
{
    return mix64(mix64(seed) ^ (salt * 0xD6E8FEB86659FD93ull));
}

//---------------------------------------------------------------------------//
}  // namespace getterflow
