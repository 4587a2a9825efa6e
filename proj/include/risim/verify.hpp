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

#ifndef RISIM_VERIFY_HPP
#define RISIM_VERIFY_HPP

// Cross-checks of the optimizer against the brute-force oracle, run by
// `risim verify`. Sizes are chosen to finish in seconds.

#include "risim/channels.hpp"
#include "risim/metrics.hpp"
#include "risim/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace risim
{

// A random optimizer input: channels, current phases, budget and element index
struct RandomInstance
{
    ChannelSet channels;
    PhaseVector phases;
    LinkBudget budget{1.0, 1.0};
    double pt_dbw = 0.0;
    std::size_t k = 0;
};

// Distances uniform in [2, 50] m, chi = 3, power uniform in [-20, 20] dBW with
// n_o = 1e-10, direct links blocked with the given probability, random phases.
RandomInstance random_instance(CounterStream &rng, std::size_t n_elements, double blocked_probability = 0.2);

struct VerificationCheck
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport
{
    std::vector<VerificationCheck> checks;

    std::size_t passed() const noexcept;
    std::size_t failed() const noexcept { return checks.size() - passed(); }
};

VerificationReport run_verification(std::uint64_t seed);

} // namespace risim

#endif
