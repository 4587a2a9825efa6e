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

#ifndef RISIM_OPTIMIZER_HPP
#define RISIM_OPTIMIZER_HPP

#include "risim/channels.hpp"
#include "risim/metrics.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace risim
{

// Which receiver an element-wise expansion refers to
enum class Target
{
    bob,
    eve
};

// f(phi) = a + b*cos(phi) + c*sin(phi).
// For Bob this is N(phi_k) = 1 + gamma_d(phi_k), for Eve D(phi_k) = 1 + gamma_e(phi_k).
struct TrigCoefficients
{
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;

    double operator()(double phi) const noexcept;
    double operator()(double cos_phi, double sin_phi) const noexcept { return a + b * cos_phi + c * sin_phi; }
    double derivative(double phi) const noexcept;

    // b == 0 and c == 0: f does not depend on phi
    bool flat() const noexcept { return b == 0.0 && c == 0.0; }
};

// Aggregate contribution of the elements other than k, written as
// sum_{i != k} conj(h_ri) * exp(-j*phi_i) * conj(h_ti) = c_r + j*c_i
// where h_t is h_rd (Bob) or h_re (Eve).
struct ResidualTerms
{
    double c_r = 0.0;
    double c_i = 0.0;
};

enum class PhaseInit
{
    zeros,
    random
};

struct OptimizerConfig
{
    unsigned sweeps = 2;         // full passes over k = 0..N-1
    unsigned grid_points = 720;  // candidate density for bracketing
    double refine_tol = 1e-9;    // radians
    PhaseInit init = PhaseInit::zeros;
    std::uint64_t init_seed = 0; // used when init == random
    std::uint64_t init_index = 0;

    // Throws DomainError naming the offending field
    void validate() const;

    bool operator==(const OptimizerConfig &) const = default;
};

struct OptimizationResult
{
    PhaseVector phases;
    double objective = 1.0;      // g at the returned phases
    std::vector<double> trace;   // g after initialization, then after every element update
};

ResidualTerms residual_terms(const ChannelSet &channels, const PhaseVector &phases, std::size_t k, Target target);

// (A, B, C) with A + B*cos(phi) + C*sin(phi) == 1 + (p_t/n_o)*|effective gain|^2
// when element k is set to phi and the other phases are held.
TrigCoefficients trig_coefficients(const ChannelSet &channels, const PhaseVector &phases, std::size_t k,
                                   const LinkBudget &budget, Target target);

// D*dN/dphi - alpha*N*dD/dphi with both products expanded into cos^2, sin^2,
// cos*sin, cos and sin terms. Has the sign of dg/dphi for g = N / D^alpha.
double stationarity_residual(const TrigCoefficients &num, const TrigCoefficients &den, double alpha, double phi) noexcept;

// Maximizes g over phi_k with the other phases fixed. The result never lowers g
// relative to the current phase and is at least the best point of an
// opt.grid_points uniform grid. For alpha == 0 the maximizer is atan2(C_d, B_d).
double optimize_element(const ChannelSet &channels, const PhaseVector &phases, std::size_t k,
                        const LinkBudget &budget, const ObjectiveConfig &cfg, const OptimizerConfig &opt);

// Alternating element-wise ascent: opt.sweeps passes over k = 0..N-1 in ascending order.
OptimizationResult optimize_phases(const ChannelSet &channels, const LinkBudget &budget,
                                   const ObjectiveConfig &cfg, const OptimizerConfig &opt);

namespace detail
{
// Generic grid + refinement search, used for every alpha > 0 and available for
// alpha == 0 to check the closed form against.
double optimize_element_numeric(const ChannelSet &channels, const PhaseVector &phases, std::size_t k,
                                const LinkBudget &budget, const ObjectiveConfig &cfg, const OptimizerConfig &opt);

// Stationary points of g over [0, 2*pi): the stationarity residual is a
// trigonometric polynomial of degree two, so it has at most four zeros.
std::vector<double> stationary_points(const TrigCoefficients &num, const TrigCoefficients &den, double alpha);
} // namespace detail

} // namespace risim

#endif
