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

#include "risim/optimizer.hpp"
#include "risim/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace risim
{

double TrigCoefficients::operator()(double phi) const noexcept
{
    return a + b * std::cos(phi) + c * std::sin(phi);
}

double TrigCoefficients::derivative(double phi) const noexcept
{
    return -b * std::sin(phi) + c * std::cos(phi);
}

void OptimizerConfig::validate() const
{
    if (sweeps < 1)
        throw DomainError("optimizer: sweeps must be at least 1");
    if (grid_points < 8)
        throw DomainError("optimizer: grid_points must be at least 8");
    if (!(refine_tol > 0.0) || !std::isfinite(refine_tol))
        throw DomainError("optimizer: refine_tol must be positive and finite");
}

namespace
{

void check_element(const ChannelSet &channels, const PhaseVector &phases, std::size_t k)
{
    channels.validate();
    if (phases.size() != channels.n_elements())
        throw DimensionError("phase count " + std::to_string(phases.size()) + " does not match " +
                             std::to_string(channels.n_elements()) + " RIS elements");
    if (k >= channels.n_elements())
        throw IndexError("element index " + std::to_string(k) + " out of range for " +
                         std::to_string(channels.n_elements()) + " RIS elements");
}

const std::vector<ComplexGain> &target_cascade(const ChannelSet &channels, Target target)
{
    return target == Target::bob ? channels.h_rd : channels.h_re;
}

double ratio(double num, double den, double alpha) noexcept
{
    if (alpha == 0.0)
        return num;
    return alpha == 1.0 ? num / den : num / std::pow(den, alpha);
}

// cos/sin of the uniform grid, cached per thread
struct GridTable
{
    unsigned points = 0;
    std::vector<double> cos_phi;
    std::vector<double> sin_phi;
};

const GridTable &grid_table(unsigned points)
{
    thread_local GridTable table;
    if (table.points != points)
    {
        table.points = points;
        table.cos_phi.resize(points);
        table.sin_phi.resize(points);
        for (unsigned j = 0; j < points; ++j)
        {
            const double phi = two_pi * double(j) / double(points);
            table.cos_phi[j] = std::cos(phi);
            table.sin_phi[j] = std::sin(phi);
        }
    }
    return table;
}

// Residual written as a0 + a1 cos + b1 sin + a2 cos2 + b2 sin2
struct TrigPoly2
{
    double a0, a1, b1, a2, b2;

    double operator()(double phi) const noexcept
    {
        return a0 + a1 * std::cos(phi) + b1 * std::sin(phi) + a2 * std::cos(2.0 * phi) + b2 * std::sin(2.0 * phi);
    }
    double derivative(double phi) const noexcept
    {
        return -a1 * std::sin(phi) + b1 * std::cos(phi) - 2.0 * a2 * std::sin(2.0 * phi) + 2.0 * b2 * std::cos(2.0 * phi);
    }
};

TrigPoly2 residual_polynomial(const TrigCoefficients &n, const TrigCoefficients &d, double alpha) noexcept
{
    const double cos2 = d.b * n.c - alpha * n.b * d.c;
    const double sin2 = -d.c * n.b + alpha * n.c * d.b;
    const double cos_sin = (1.0 - alpha) * (d.c * n.c - d.b * n.b);
    const double cos1 = d.a * n.c - alpha * n.a * d.c;
    const double sin1 = -d.a * n.b + alpha * n.a * d.b;
    return TrigPoly2{0.5 * (cos2 + sin2), cos1, sin1, 0.5 * (cos2 - sin2), 0.5 * cos_sin};
}

double polish_root(const TrigPoly2 &poly, double phi) noexcept
{
    const double start = std::abs(poly(phi));
    double x = phi;
    for (int it = 0; it < 30; ++it)
    {
        const double slope = poly.derivative(x);
        if (slope == 0.0)
            break;
        const double step = std::clamp(poly(x) / slope, -0.1, 0.1);
        x -= step;
        if (std::abs(step) < 1e-15)
            break;
    }
    return std::abs(poly(x)) <= start ? x : phi;
}

} // namespace

ResidualTerms residual_terms(const ChannelSet &channels, const PhaseVector &phases, std::size_t k, Target target)
{
    check_element(channels, phases, k);
    const auto &cascade = target_cascade(channels, target);

    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < channels.n_elements(); ++i)
    {
        if (i == k)
            continue;
        sum += std::conj(channels.h_r[i].value()) * std::polar(1.0, -phases[i]) * std::conj(cascade[i].value());
    }
    return ResidualTerms{sum.real(), sum.imag()};
}

TrigCoefficients trig_coefficients(const ChannelSet &channels, const PhaseVector &phases, std::size_t k,
                                   const LinkBudget &budget, Target target)
{
    const ResidualTerms res = residual_terms(channels, phases, k, target);
    const ComplexGain &direct = target == Target::bob ? channels.h_d : channels.h_e;

    // Everything except element k, and element k's cascade coefficient:
    // |rest + coupled*e^{j phi}|^2 = |rest|^2 + |coupled|^2 + 2 Re{coupled * conj(rest) * e^{j phi}}
    const std::complex<double> rest = direct.value() + std::complex<double>(res.c_r, -res.c_i);
    const std::complex<double> coupled = channels.h_r[k].value() * target_cascade(channels, target)[k].value();
    const std::complex<double> cross = coupled * std::conj(rest);
    const double s = budget.snr_scale();

    return TrigCoefficients{1.0 + s * (std::norm(rest) + std::norm(coupled)), 2.0 * s * cross.real(),
                            -2.0 * s * cross.imag()};
}

double stationarity_residual(const TrigCoefficients &num, const TrigCoefficients &den, double alpha, double phi) noexcept
{
    const double cs = std::cos(phi);
    const double sn = std::sin(phi);
    const double lhs = den.b * num.c * cs * cs - den.c * num.b * sn * sn + (-den.b * num.b + den.c * num.c) * cs * sn +
                       den.a * (num.c * cs - num.b * sn);
    const double rhs = alpha * (num.b * den.c * cs * cs - num.c * den.b * sn * sn +
                                (-num.b * den.b + num.c * den.c) * cs * sn + num.a * (den.c * cs - den.b * sn));
    return lhs - rhs;
}

namespace detail
{

std::vector<double> stationary_points(const TrigCoefficients &num, const TrigCoefficients &den, double alpha)
{
    const TrigPoly2 poly = residual_polynomial(num, den, alpha);

    // With z = e^{j phi}, z^2 * residual is a degree-4 polynomial whose unit-circle
    // roots are the stationary points. Ascending coefficients:
    using cd = std::complex<double>;
    std::array<cd, 5> p{cd(poly.a2, poly.b2) * 0.5, cd(poly.a1, poly.b1) * 0.5, cd(poly.a0, 0.0),
                        cd(poly.a1, -poly.b1) * 0.5, cd(poly.a2, -poly.b2) * 0.5};

    double scale = 0.0;
    for (const cd &c : p)
        scale = std::max(scale, std::abs(c));
    if (scale == 0.0)
        return {};

    // p[4] = conj(p[0]) and p[3] = conj(p[1]): a vanishing leading term drops the
    // matching trailing term too (common factor z).
    std::size_t lo = 0, hi = 4;
    while (hi > lo && std::abs(p[hi]) <= 1e-14 * scale)
    {
        --hi;
        ++lo;
    }
    const std::size_t degree = hi - lo;
    if (degree == 0)
        return {};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(Eigen::Index(degree), Eigen::Index(degree));
    for (std::size_t j = 0; j < degree; ++j)
        companion(0, Eigen::Index(j)) = -p[hi - 1 - j] / p[hi];
    for (std::size_t j = 1; j < degree; ++j)
        companion(Eigen::Index(j), Eigen::Index(j - 1)) = 1.0;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<double> out;
    if (solver.info() != Eigen::Success)
        return out;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    {
        const cd z = solver.eigenvalues()(i);
        if (z == cd(0.0, 0.0))
            continue;
        out.push_back(wrap_phase(polish_root(poly, std::arg(z))));
    }
    return out;
}

double optimize_element_numeric(const ChannelSet &channels, const PhaseVector &phases, std::size_t k,
                                const LinkBudget &budget, const ObjectiveConfig &cfg, const OptimizerConfig &opt)
{
    check_element(channels, phases, k);
    opt.validate();

    const double alpha = cfg.alpha();
    const TrigCoefficients num = trig_coefficients(channels, phases, k, budget, Target::bob);
    const TrigCoefficients den = trig_coefficients(channels, phases, k, budget, Target::eve);
    const double current = phases[k];

    // g does not depend on phi_k
    if (num.flat() && (alpha == 0.0 || den.flat()))
        return current;

    // Coarse scan of g = N / D^alpha
    const GridTable &grid = grid_table(opt.grid_points);
    unsigned best_j = 0;
    double best_val = -1.0;
    for (unsigned j = 0; j < opt.grid_points; ++j)
    {
        const double val = ratio(num(grid.cos_phi[j], grid.sin_phi[j]), den(grid.cos_phi[j], grid.sin_phi[j]), alpha);
        if (val > best_val)
        {
            best_val = val;
            best_j = j;
        }
    }

    const double step = two_pi / double(opt.grid_points);
    const double grid_best = step * double(best_j);
    std::vector<double> candidates{grid_best};

    // Refine inside the two cells around the best grid point
    double lo = grid_best - step;
    double hi = grid_best + step;
    if (stationarity_residual(num, den, alpha, lo) > 0.0 && stationarity_residual(num, den, alpha, hi) < 0.0)
    {
        while (hi - lo > opt.refine_tol)
        {
            const double mid = 0.5 * (lo + hi);
            if (stationarity_residual(num, den, alpha, mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        candidates.push_back(wrap_phase(0.5 * (lo + hi)));
    }
    else
    {
        // No sign change in the bracket: golden-section on g itself
        constexpr double inv_phi = 0.6180339887498949;
        auto g = [&](double x) { return ratio(num(x), den(x), alpha); };
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double g1 = g(x1), g2 = g(x2);
        while (hi - lo > opt.refine_tol)
        {
            if (g1 < g2)
            {
                lo = x1;
                x1 = x2;
                g1 = g2;
                x2 = lo + inv_phi * (hi - lo);
                g2 = g(x2);
            }
            else
            {
                hi = x2;
                x2 = x1;
                g2 = g1;
                x1 = hi - inv_phi * (hi - lo);
                g1 = g(x1);
            }
        }
        candidates.push_back(wrap_phase(0.5 * (lo + hi)));
    }

    // Peaks narrower than the grid spacing are only reachable through the exact
    // stationary points.
    for (double phi : stationary_points(num, den, alpha))
        candidates.push_back(phi);

    // Final selection on the full objective. The current phase wins ties; among
    // equal new candidates the smallest phase wins.
    std::sort(candidates.begin(), candidates.end());
    PhaseVector trial = phases;
    double best_phi = current;
    double best_g = objective_g(channels, trial, budget, cfg);
    for (double phi : candidates)
    {
        trial.set(k, phi);
        const double val = objective_g(channels, trial, budget, cfg);
        if (val > best_g)
        {
            best_g = val;
            best_phi = phi;
        }
    }
    return best_phi;
}

} // namespace detail

double optimize_element(const ChannelSet &channels, const PhaseVector &phases, std::size_t k,
                        const LinkBudget &budget, const ObjectiveConfig &cfg, const OptimizerConfig &opt)
{
    if (cfg.alpha() != 0.0)
        return detail::optimize_element_numeric(channels, phases, k, budget, cfg, opt);

    check_element(channels, phases, k);
    const TrigCoefficients num = trig_coefficients(channels, phases, k, budget, Target::bob);
    if (num.flat())
        return phases[k];

    // N(phi) = A + B cos(phi) + C sin(phi) peaks at atan2(C, B)
    const double phi = wrap_phase(std::atan2(num.c, num.b));
    PhaseVector trial = phases;
    trial.set(k, phi);
    return objective_g(channels, trial, budget, cfg) > objective_g(channels, phases, budget, cfg) ? phi : phases[k];
}

OptimizationResult optimize_phases(const ChannelSet &channels, const LinkBudget &budget, const ObjectiveConfig &cfg,
                                   const OptimizerConfig &opt)
{
    opt.validate();
    channels.validate();
    const std::size_t n = channels.n_elements();

    OptimizationResult result;
    if (opt.init == PhaseInit::random)
    {
        CounterStream stream(opt.init_seed, opt.init_index, StreamTag::optimizer_init);
        std::vector<double> init(n);
        for (double &p : init)
            p = stream.phase();
        result.phases = PhaseVector(std::move(init));
    }
    else
    {
        result.phases = PhaseVector::zeros(n);
    }

    result.trace.reserve(1 + std::size_t(opt.sweeps) * n);
    result.trace.push_back(objective_g(channels, result.phases, budget, cfg));
    for (unsigned sweep = 0; sweep < opt.sweeps; ++sweep)
    {
        for (std::size_t k = 0; k < n; ++k)
        {
            result.phases.set(k, optimize_element(channels, result.phases, k, budget, cfg, opt));
            result.trace.push_back(objective_g(channels, result.phases, budget, cfg));
        }
    }
    result.objective = result.trace.back();
    return result;
}

} // namespace risim
