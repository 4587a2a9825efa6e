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

#include "risim/oracle.hpp"
#include "risim/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace risim::oracle
{

namespace
{

using cd = std::complex<double>;

double ratio(double bob, double eve, double alpha) noexcept
{
    if (alpha == 0.0)
        return bob;
    return alpha == 1.0 ? bob / eve : bob / std::pow(eve, alpha);
}

void check_dims(const ChannelSet &channels, const PhaseVector &phases)
{
    channels.validate();
    if (phases.size() != channels.n_elements())
        throw DimensionError("oracle: phase count does not match RIS element count");
}

} // namespace

std::uint64_t GridSpec::total() const noexcept
{
    std::uint64_t t = 1;
    for (std::size_t d = 0; d < dims; ++d)
    {
        if (points_per_dim != 0 && t > std::numeric_limits<std::uint64_t>::max() / points_per_dim)
            return std::numeric_limits<std::uint64_t>::max();
        t *= points_per_dim;
    }
    return t;
}

void GridSpec::validate() const
{
    if (points_per_dim < 2)
        throw DomainError("grid: points_per_dim must be at least 2");
    if (dims < 1)
        throw DomainError("grid: dims must be at least 1");
    if (total() > evaluation_cap)
        throw ResourceError("grid: " + std::to_string(points_per_dim) + "^" + std::to_string(dims) +
                            " evaluations exceed the cap of " + std::to_string(evaluation_cap));
}

PhaseGrid::PhaseGrid(std::size_t points, std::uint64_t evaluation_cap)
{
    GridSpec{points, 1, evaluation_cap}.validate();
    phasors_.resize(points);
    for (std::size_t i = 0; i < points; ++i)
        phasors_[i] = std::polar(1.0, phase(i));
}

double PhaseGrid::phase(std::size_t i) const noexcept
{
    return two_pi * double(i) / double(phasors_.size());
}

ElementSearchResult grid_search_element(const ChannelSet &channels, const PhaseVector &phases, std::size_t k,
                                        const LinkBudget &budget, const ObjectiveConfig &cfg, const PhaseGrid &grid)
{
    check_dims(channels, phases);
    if (k >= channels.n_elements())
        throw IndexError("oracle: element index " + std::to_string(k) + " out of range");

    // Everything but element k, then element k's cascade product
    cd rest_bob = channels.h_d.value();
    cd rest_eve = channels.h_e.value();
    for (std::size_t i = 0; i < channels.n_elements(); ++i)
    {
        if (i == k)
            continue;
        const cd through = channels.h_r[i].value() * std::polar(1.0, phases[i]);
        rest_bob += through * channels.h_rd[i].value();
        rest_eve += through * channels.h_re[i].value();
    }
    const cd path_bob = channels.h_r[k].value() * channels.h_rd[k].value();
    const cd path_eve = channels.h_r[k].value() * channels.h_re[k].value();

    const double s = budget.snr_scale();
    const double alpha = cfg.alpha();
    ElementSearchResult best{0.0, -1.0};
    for (std::size_t j = 0; j < grid.size(); ++j)
    {
        const cd e = grid.phasor(j);
        const double g = ratio(1.0 + s * std::norm(rest_bob + path_bob * e), 1.0 + s * std::norm(rest_eve + path_eve * e),
                               alpha);
        if (g > best.g)
            best = {grid.phase(j), g};
    }
    return best;
}

ElementSearchResult grid_search_element(const ChannelSet &channels, const PhaseVector &phases, std::size_t k,
                                        const LinkBudget &budget, const ObjectiveConfig &cfg, std::size_t points)
{
    return grid_search_element(channels, phases, k, budget, cfg, PhaseGrid(points));
}

JointSearchResult joint_grid_search(const ChannelSet &channels, const LinkBudget &budget, const ObjectiveConfig &cfg,
                                    const GridSpec &spec)
{
    channels.validate();
    spec.validate();
    const std::size_t n = channels.n_elements();
    if (spec.dims != n)
        throw DimensionError("oracle: grid dims " + std::to_string(spec.dims) + " != RIS elements " + std::to_string(n));

    const PhaseGrid grid(spec.points_per_dim, spec.evaluation_cap);
    const std::size_t m = grid.size();

    // Per-element cascade products at every grid phase
    std::vector<cd> bob_terms(n * m), eve_terms(n * m);
    for (std::size_t i = 0; i < n; ++i)
    {
        const cd a = channels.h_r[i].value();
        const cd path_bob = a * channels.h_rd[i].value();
        const cd path_eve = a * channels.h_re[i].value();
        for (std::size_t j = 0; j < m; ++j)
        {
            bob_terms[i * m + j] = path_bob * grid.phasor(j);
            eve_terms[i * m + j] = path_eve * grid.phasor(j);
        }
    }

    const double s = budget.snr_scale();
    const double alpha = cfg.alpha();
    const cd direct_bob = channels.h_d.value();
    const cd direct_eve = channels.h_e.value();

    std::vector<std::size_t> idx(n, 0), best_idx(n, 0);
    double best_g = -1.0;
    for (std::uint64_t flat = 0, total = spec.total(); flat < total; ++flat)
    {
        cd bob = direct_bob, eve = direct_eve;
        for (std::size_t i = 0; i < n; ++i)
        {
            bob += bob_terms[i * m + idx[i]];
            eve += eve_terms[i * m + idx[i]];
        }
        const double g = ratio(1.0 + s * std::norm(bob), 1.0 + s * std::norm(eve), alpha);
        if (g > best_g)
        {
            best_g = g;
            best_idx = idx;
        }
        // Odometer, last element fastest
        for (std::size_t i = n; i-- > 0;)
        {
            if (++idx[i] < m)
                break;
            idx[i] = 0;
        }
    }

    std::vector<double> phases(n);
    for (std::size_t i = 0; i < n; ++i)
        phases[i] = grid.phase(best_idx[i]);
    return JointSearchResult{PhaseVector(std::move(phases)), best_g};
}

} // namespace risim::oracle
