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

#include "risim/montecarlo.hpp"
#include "risim/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace risim
{

const char *to_string(DirectLinks d) noexcept
{
    return d == DirectLinks::present ? "present" : "blocked";
}

const char *to_string(PhasePolicy p) noexcept
{
    switch (p)
    {
    case PhasePolicy::optimized:
        return "optimized";
    case PhasePolicy::random:
        return "random";
    case PhasePolicy::zero:
        return "zero";
    }
    return "?";
}

const char *to_string(PhaseInit p) noexcept
{
    return p == PhaseInit::zeros ? "zeros" : "random";
}

void Scenario::validate() const
{
    const std::string where = "scenario '" + name + "': ";
    if (name.empty())
        throw DomainError("scenario: name must not be empty");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw DomainError(where + "alpha must lie in [0, 1]");
    try
    {
        geometry.validate();
    }
    catch (const DomainError &e)
    {
        throw DomainError(where + e.what());
    }
}

std::vector<double> SweepConfig::default_pt_grid()
{
    std::vector<double> grid;
    for (int p = -20; p <= 20; p += 2)
        grid.push_back(double(p));
    return grid;
}

void SweepConfig::validate() const
{
    if (pt_dbw.empty())
        throw DomainError("sweep: pt_dbw must not be empty");
    for (std::size_t i = 0; i < pt_dbw.size(); ++i)
    {
        if (!std::isfinite(pt_dbw[i]))
            throw DomainError("sweep: pt_dbw values must be finite");
        if (i > 0 && !(pt_dbw[i] > pt_dbw[i - 1]))
            throw DomainError("sweep: pt_dbw must be strictly ascending");
    }
    if (!(n_o > 0.0) || !std::isfinite(n_o))
        throw DomainError("sweep: n_o must be positive and finite");
    if (realizations < 1)
        throw DomainError("sweep: realizations must be at least 1");
    optimizer.validate();
}

ChannelSet realization_channels(const Scenario &scenario, std::uint64_t seed, std::uint64_t index)
{
    scenario.validate();
    CounterStream stream(seed, index, StreamTag::channels);
    return detail::draw_channels(scenario.geometry, scenario.n_elements, stream);
}

PhaseVector realization_phases(const Scenario &scenario, const ChannelSet &channels, double pt_dbw,
                               std::uint64_t index, const SweepConfig &sweep)
{
    const std::size_t n = channels.n_elements();
    if (n == 0 || scenario.phase_policy == PhasePolicy::zero)
        return PhaseVector::zeros(n);

    if (scenario.phase_policy == PhasePolicy::random)
    {
        CounterStream stream(sweep.seed, index, StreamTag::phase_policy);
        std::vector<double> phases(n);
        for (double &p : phases)
            p = stream.phase();
        return PhaseVector(std::move(phases));
    }

    OptimizerConfig opt = sweep.optimizer;
    opt.init_seed = sweep.seed;
    opt.init_index = index;
    return optimize_phases(channels, LinkBudget::from_dbw(pt_dbw, sweep.n_o), ObjectiveConfig(scenario.alpha), opt)
        .phases;
}

double run_realization(const Scenario &scenario, double pt_dbw, std::uint64_t index, const SweepConfig &sweep)
{
    ChannelSet channels = realization_channels(scenario, sweep.seed, index);
    if (scenario.direct_links == DirectLinks::blocked)
        channels = block_direct_links(channels);

    const PhaseVector phases = realization_phases(scenario, channels, pt_dbw, index, sweep);
    const SnrPair snrs = snr_pair(channels, phases, LinkBudget::from_dbw(pt_dbw, sweep.n_o));
    return weighted_secrecy_capacity(snrs, ObjectiveConfig(1.0));
}

unsigned resolve_worker_count(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("RISIM_THREADS"))
    {
        char *end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return unsigned(std::min<unsigned long>(v, 1024));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace
{

SweepRow aggregate(const Scenario &scenario, double pt_dbw, const SweepConfig &sweep)
{
    const std::size_t r = sweep.realizations;
    std::vector<double> values(r);
    for (std::size_t i = 0; i < r; ++i)
        values[i] = run_realization(scenario, pt_dbw, i, sweep);

    // Fixed left-to-right order, two passes
    double sum = 0.0;
    for (double v : values)
        sum += v;
    const double mean = sum / double(r);
    double ss = 0.0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    const double stderr_mean = r > 1 ? std::sqrt(ss / double(r - 1) / double(r)) : 0.0;

    return SweepRow{scenario.name, scenario.alpha, scenario.direct_links, scenario.n_elements,
                    pt_dbw,        r,              mean,                  stderr_mean};
}

} // namespace

SweepResult run_sweep(const std::vector<Scenario> &scenarios, const SweepConfig &sweep, unsigned workers)
{
    sweep.validate();
    for (const auto &s : scenarios)
        s.validate();

    const std::size_t n_pt = sweep.pt_dbw.size();
    const std::size_t n_tasks = scenarios.size() * n_pt;
    SweepResult result;
    result.rows.resize(n_tasks);
    if (n_tasks == 0)
        return result;

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&]() {
        for (std::size_t t = next++; t < n_tasks; t = next++)
        {
            try
            {
                result.rows[t] = aggregate(scenarios[t / n_pt], sweep.pt_dbw[t % n_pt], sweep);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = n_tasks;
            }
        }
    };

    const unsigned n_workers = unsigned(std::min<std::size_t>(resolve_worker_count(workers), n_tasks));
    if (n_workers <= 1)
    {
        work();
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w)
            pool.emplace_back(work);
    }

    if (failure)
        std::rethrow_exception(failure);
    return result;
}

} // namespace risim
