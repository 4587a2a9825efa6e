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

#include "risim/metrics.hpp"
#include "risim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace risim
{

double dbw_to_watts(double dbw) noexcept
{
    return std::pow(10.0, dbw / 10.0);
}

double watts_to_dbw(double watts) noexcept
{
    return 10.0 * std::log10(watts);
}

LinkBudget::LinkBudget(double p_t, double n_o) : p_t_(p_t), n_o_(n_o)
{
    if (!(p_t >= 0.0) || !std::isfinite(p_t))
        throw DomainError("link budget: transmit power must be finite and non-negative");
    if (!(n_o > 0.0) || !std::isfinite(n_o))
        throw DomainError("link budget: noise power must be finite and positive");
}

LinkBudget LinkBudget::from_dbw(double p_t_dbw, double n_o)
{
    return LinkBudget(dbw_to_watts(p_t_dbw), n_o);
}

PhaseVector::PhaseVector(std::vector<double> phases) : phases_(std::move(phases))
{
    for (double &p : phases_)
    {
        if (!std::isfinite(p))
            throw DomainError("phase vector: phases must be finite");
        p = wrap_phase(p);
    }
}

void PhaseVector::set(std::size_t i, double phi)
{
    if (i >= phases_.size())
        throw IndexError("phase vector: index " + std::to_string(i) + " out of range");
    if (!std::isfinite(phi))
        throw DomainError("phase vector: phases must be finite");
    phases_[i] = wrap_phase(phi);
}

ObjectiveConfig::ObjectiveConfig(double alpha) : alpha_(alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw DomainError("alpha must lie in [0, 1], got " + std::to_string(alpha));
}

std::complex<double> effective_gain(const ComplexGain &direct, std::span<const ComplexGain> cascade_a,
                                    std::span<const ComplexGain> cascade_b, const PhaseVector &phases)
{
    if (cascade_a.size() != phases.size() || cascade_b.size() != phases.size())
        throw DimensionError("effective_gain: cascade lengths (" + std::to_string(cascade_a.size()) + ", " +
                             std::to_string(cascade_b.size()) + ") do not match phase count " +
                             std::to_string(phases.size()));

    std::complex<double> sum = direct.value();
    for (std::size_t i = 0; i < phases.size(); ++i)
        sum += cascade_a[i].value() * std::polar(1.0, phases[i]) * cascade_b[i].value();
    return sum;
}

double snr(std::complex<double> effective, const LinkBudget &budget) noexcept
{
    return budget.snr_scale() * std::norm(effective);
}

SnrPair snr_pair(const ChannelSet &channels, const PhaseVector &phases, const LinkBudget &budget)
{
    channels.validate();
    return SnrPair{snr(effective_gain(channels.h_d, channels.h_r, channels.h_rd, phases), budget),
                   snr(effective_gain(channels.h_e, channels.h_r, channels.h_re, phases), budget)};
}

double weighted_secrecy_capacity(const SnrPair &snrs, const ObjectiveConfig &cfg)
{
    const double c = std::log2(1.0 + snrs.gamma_d) - cfg.alpha() * std::log2(1.0 + snrs.gamma_e);
    return std::max(c, 0.0);
}

double objective_ratio(const SnrPair &snrs, double alpha) noexcept
{
    const double num = 1.0 + snrs.gamma_d;
    if (alpha == 0.0)
        return num;
    const double den = 1.0 + snrs.gamma_e;
    return alpha == 1.0 ? num / den : num / std::pow(den, alpha);
}

double objective_g(const ChannelSet &channels, const PhaseVector &phases, const LinkBudget &budget,
                   const ObjectiveConfig &cfg)
{
    return objective_ratio(snr_pair(channels, phases, budget), cfg.alpha());
}

} // namespace risim
