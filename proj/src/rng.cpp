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

#include "risim/rng.hpp"

#include <cmath>
#include <numbers>

namespace risim
{

namespace
{
constexpr std::uint32_t philox_m0 = 0xD2511F53u;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo) noexcept
{
    const std::uint64_t p = std::uint64_t(a) * std::uint64_t(b);
    hi = std::uint32_t(p >> 32);
    lo = std::uint32_t(p);
}
} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) noexcept
{
    for (int round = 0; round < 10; ++round)
    {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(philox_m0, ctr[0], hi0, lo0);
        mulhilo(philox_m1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += philox_w0;
        key[1] += philox_w1;
    }
    return ctr;
}

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t index, StreamTag tag) noexcept
    : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
      counter_{0u, std::uint32_t(tag), std::uint32_t(index), std::uint32_t(index >> 32)}
{
}

void CounterStream::refill() noexcept
{
    block_ = philox4x32(counter_, key_);
    ++counter_[0];
    used_ = 0;
}

CounterStream::result_type CounterStream::operator()() noexcept
{
    if (used_ > 2)
        refill();
    const std::uint64_t lo = block_[used_];
    const std::uint64_t hi = block_[used_ + 1];
    used_ += 2;
    return (hi << 32) | lo;
}

double CounterStream::uniform() noexcept
{
    return double((*this)() >> 11) * 0x1.0p-53;
}

double CounterStream::rayleigh_unit_power() noexcept
{
    // r^2 ~ Exp(1); 1 - u lies in (0, 1] so the log is finite
    return std::sqrt(-std::log1p(-uniform()));
}

double CounterStream::phase() noexcept
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double p = two_pi * uniform();
    return p < two_pi ? p : 0.0;
}

} // namespace risim
