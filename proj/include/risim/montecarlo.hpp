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

#ifndef RISIM_MONTECARLO_HPP
#define RISIM_MONTECARLO_HPP

#include "risim/channels.hpp"
#include "risim/metrics.hpp"
#include "risim/optimizer.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace risim
{

enum class DirectLinks
{
    present,
    blocked
};

enum class PhasePolicy
{
    optimized,
    random,
    zero
};

const char *to_string(DirectLinks d) noexcept;
const char *to_string(PhasePolicy p) noexcept;
const char *to_string(PhaseInit p) noexcept;

// One curve of an experiment. n_elements == 0 is the no-RIS baseline.
// alpha only steers the optimizer; reported capacities always use alpha = 1.
struct Scenario
{
    std::string name;
    Geometry geometry;
    std::size_t n_elements = 2;
    double alpha = 1.0;
    DirectLinks direct_links = DirectLinks::present;
    PhasePolicy phase_policy = PhasePolicy::optimized;

    // Throws DomainError with the scenario name and field
    void validate() const;

    bool operator==(const Scenario &) const = default;
};

struct SweepConfig
{
    std::vector<double> pt_dbw;          // strictly ascending
    double n_o = 1e-10;                  // Watts
    std::size_t realizations = 10'000;
    std::uint64_t seed = 1;
    OptimizerConfig optimizer;           // optimizer.sweeps is the repetition count

    // 21 points from -20 to 20 dBW
    static std::vector<double> default_pt_grid();

    void validate() const;

    bool operator==(const SweepConfig &) const = default;
};

struct SweepRow
{
    std::string scenario;
    double alpha = 1.0;
    DirectLinks direct_links = DirectLinks::present;
    std::size_t n_elements = 0;
    double pt_dbw = 0.0;
    std::size_t realizations = 0;
    double mean_secrecy = 0.0;   // bits per channel use
    double stderr_secrecy = 0.0; // standard error of the mean
};

struct SweepResult
{
    // Ordered by scenario list position, then ascending power
    std::vector<SweepRow> rows;
};

// Channels of realization `index` before direct-link blocking. Depends only on
// (seed, index, geometry, n_elements); with n_elements == 0 only h_d and h_e are drawn.
ChannelSet realization_channels(const Scenario &scenario, std::uint64_t seed, std::uint64_t index);

// Phases applied in realization `index` under the scenario's phase policy
PhaseVector realization_phases(const Scenario &scenario, const ChannelSet &channels, double pt_dbw,
                               std::uint64_t index, const SweepConfig &sweep);

// Secrecy capacity max(log2(1+gamma_d) - log2(1+gamma_e), 0) of one realization
double run_realization(const Scenario &scenario, double pt_dbw, std::uint64_t index, const SweepConfig &sweep);

// Number of worker threads: `requested` if non-zero, else RISIM_THREADS if set and
// non-zero, else the hardware concurrency.
unsigned resolve_worker_count(unsigned requested);

// Averages every (scenario, power) pair over realizations 0..R-1. Realization i
// draws the same channels in every scenario. The result does not depend on the
// worker count.
SweepResult run_sweep(const std::vector<Scenario> &scenarios, const SweepConfig &sweep, unsigned workers = 0);

} // namespace risim

#endif
