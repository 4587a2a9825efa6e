// SPDX-License-Identifier: Apache-2.0
//
// risim: simulation library for RIS-assisted physical-layer secrecy
// Copyright (C) 2026 The risim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISIM_RNG_HPP
#define RISIM_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace risim
{

// Philox4x32-10 block function (Salmon et al., SC'11). Maps a 128-bit counter
// and a 64-bit key to 128 pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key) noexcept;

// Substream tags. Each (seed, index, tag) triple addresses a disjoint region of
// the Philox counter space.
enum class StreamTag : std::uint32_t
{
    channels = 0,
    phase_policy = 1,
    optimizer_init = 2,
    test = 0xFFFF,
};

// Counter-based random stream keyed by (seed, index, tag).
//
// The 128-bit counter is laid out as [block, tag, index_lo, index_hi], so streams
// with different (index, tag) never share a counter value and the sequence drawn
// for one realization does not depend on how many values any other stream used.
// Satisfies UniformRandomBitGenerator, but the conversions below are used instead
// of <random> distributions so that outputs are identical across standard libraries.
class CounterStream
{
public:
    using result_type = std::uint64_t;

    CounterStream(std::uint64_t seed, std::uint64_t index, StreamTag tag = StreamTag::channels) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    // Uniform on [0, 1) with 53 random bits
    double uniform() noexcept;

    // Rayleigh magnitude with E[r^2] = 1
    double rayleigh_unit_power() noexcept;

    // Uniform phase on [0, 2*pi)
    double phase() noexcept;

private:
    void refill() noexcept;

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> block_{};
    unsigned used_ = 4; // 32-bit words consumed from block_
};

} // namespace risim

#endif
