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

#ifndef RISIM_ORACLE_HPP
#define RISIM_ORACLE_HPP

// Brute-force references for the optimizer. Everything here evaluates the
// objective straight from the complex channel coefficients and never touches the
// trigonometric expansions, so it can be used to check them.

#include "risim/channels.hpp"
#include "risim/metrics.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace risim::oracle
{

inline constexpr std::uint64_t default_evaluation_cap = 100'000'000;

struct GridSpec
{
    std::size_t points_per_dim = 360;
    std::size_t dims = 1;
    std::uint64_t evaluation_cap = default_evaluation_cap;

    // points_per_dim^dims, saturating at UINT64_MAX
    std::uint64_t total() const noexcept;

    // Throws DomainError for points_per_dim < 2 or dims < 1, ResourceError above the cap
    void validate() const;
};

// Unit phasors e^{j*2*pi*i/points}, i = 0..points-1
class PhaseGrid
{
public:
    explicit PhaseGrid(std::size_t points, std::uint64_t evaluation_cap = default_evaluation_cap);

    std::size_t size() const noexcept { return phasors_.size(); }
    double phase(std::size_t i) const noexcept;
    std::complex<double> phasor(std::size_t i) const noexcept { return phasors_[i]; }

private:
    std::vector<std::complex<double>> phasors_;
};

struct ElementSearchResult
{
    double phi = 0.0;
    double g = 1.0;
};

struct JointSearchResult
{
    PhaseVector phases;
    double g = 1.0;
};

// Exhaustive maximum of g over phi_k on a uniform grid, other phases held.
// Ties resolve to the smallest grid index.
ElementSearchResult grid_search_element(const ChannelSet &channels, const PhaseVector &phases, std::size_t k,
                                        const LinkBudget &budget, const ObjectiveConfig &cfg, const PhaseGrid &grid);

ElementSearchResult grid_search_element(const ChannelSet &channels, const PhaseVector &phases, std::size_t k,
                                        const LinkBudget &budget, const ObjectiveConfig &cfg, std::size_t points);

// Exhaustive maximum of g over the full N-dimensional phase grid (spec.dims must equal N).
// Index order is lexicographic with element 0 most significant; ties resolve to the first index.
JointSearchResult joint_grid_search(const ChannelSet &channels, const LinkBudget &budget, const ObjectiveConfig &cfg,
                                    const GridSpec &spec);

} // namespace risim::oracle

#endif
