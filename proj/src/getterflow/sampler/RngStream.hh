//---------------------------------*-C++-*-----------------------------------//
// Copyright getterflow contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file getterflow/sampler/RngStream.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>

namespace getterflow
{
//---------------------------------------------------------------------------//
/*!
 * Philox4x32-10 counter-based generator.
 *
 * Salmon et al., "Parallel random numbers: as easy as 1, 2, 3" (SC11).
 * The output is a pure function of (key, counter), which gives every
 * particle an independent, reproducible substream.
 */
class Philox4x32
{
  public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Block generate(Block counter, Key key);
};

//---------------------------------------------------------------------------//
/*!
 * Per-particle random stream keyed by (seed, stream_id).
 *
 * The 128-bit Philox counter holds the stream id in its upper half and a
 * block index in its lower half; each block yields two 53-bit doubles.
 * Draw sequences are identical on every platform and thread schedule.
 */
class RngStream
{
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    //! Uniform double in [0, 1)
    double uniform();
    //! Raw 64-bit output
    std::uint64_t next_u64();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t block_{0};
    Philox4x32::Block buffer_{};
    int used_{2};  // 64-bit words consumed from buffer
};

//---------------------------------------------------------------------------//
//! SplitMix64 finalizer, used to derive independent seeds
std::uint64_t mix64(std::uint64_t x);

//! Combine a seed with a salt into a new seed
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

//---------------------------------------------------------------------------//
}  // namespace getterflow
