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

#ifndef RISIM_METRICS_HPP
#define RISIM_METRICS_HPP

#include "risim/channels.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace risim
{

double dbw_to_watts(double dbw) noexcept;
double watts_to_dbw(double watts) noexcept;

// Transmit power and noise power, both in Watts
class LinkBudget
{
public:
    // Throws DomainError unless p_t >= 0 and n_o > 0
    LinkBudget(double p_t, double n_o);

    static LinkBudget from_dbw(double p_t_dbw, double n_o);

    double p_t() const noexcept { return p_t_; }
    double n_o() const noexcept { return n_o_; }
    double snr_scale() const noexcept { return p_t_ / n_o_; }

private:
    double p_t_;
    double n_o_;
};

// RIS phases, each kept in [0, 2*pi)
class PhaseVector
{
public:
    PhaseVector() = default;
    explicit PhaseVector(std::vector<double> phases);

    static PhaseVector zeros(std::size_t n) { return PhaseVector(std::vector<double>(n, 0.0)); }

    std::size_t size() const noexcept { return phases_.size(); }
    double operator[](std::size_t i) const { return phases_[i]; }
    void set(std::size_t i, double phi);
    std::span<const double> values() const noexcept { return phases_; }

    bool operator==(const PhaseVector &) const = default;

private:
    std::vector<double> phases_;
};

// Linear SNRs at Bob and Eve
struct SnrPair
{
    double gamma_d = 0.0;
    double gamma_e = 0.0;
};

// Weight on Eve's log term; alpha = 0 ignores Eve, alpha = 1 is the true secrecy rate
class ObjectiveConfig
{
public:
    // Throws DomainError unless 0 <= alpha <= 1
    explicit ObjectiveConfig(double alpha = 1.0);

    double alpha() const noexcept { return alpha_; }

private:
    double alpha_;
};

// direct + sum_i cascade_a[i] * exp(j*phi_i) * cascade_b[i]
std::complex<double> effective_gain(const ComplexGain &direct, std::span<const ComplexGain> cascade_a,
                                    std::span<const ComplexGain> cascade_b, const PhaseVector &phases);

// (p_t / n_o) * |effective|^2
double snr(std::complex<double> effective, const LinkBudget &budget) noexcept;

SnrPair snr_pair(const ChannelSet &channels, const PhaseVector &phases, const LinkBudget &budget);

// max(log2(1 + gamma_d) - alpha * log2(1 + gamma_e), 0) in bits per channel use
double weighted_secrecy_capacity(const SnrPair &snrs, const ObjectiveConfig &cfg);

// Unclamped ratio g = (1 + gamma_d) / (1 + gamma_e)^alpha that the optimizer maximizes.
// log2(g) equals the weighted secrecy capacity whenever g >= 1.
double objective_g(const ChannelSet &channels, const PhaseVector &phases, const LinkBudget &budget,
                   const ObjectiveConfig &cfg);

// (1 + gamma_d) / (1 + gamma_e)^alpha for precomputed SNRs
double objective_ratio(const SnrPair &snrs, double alpha) noexcept;

} // namespace risim

#endif
