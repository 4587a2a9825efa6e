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

#include "risim/verify.hpp"
#include "risim/montecarlo.hpp"
#include "risim/optimizer.hpp"
#include "risim/oracle.hpp"
#include "risim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace risim
{

RandomInstance random_instance(CounterStream &rng, std::size_t n_elements, double blocked_probability)
{
    Geometry g;
    g.d_br = 2.0 + 48.0 * rng.uniform();
    g.d_rd = 2.0 + 48.0 * rng.uniform();
    g.d_re = 2.0 + 48.0 * rng.uniform();
    g.d_bd = 2.0 + 48.0 * rng.uniform();
    g.d_be = 2.0 + 48.0 * rng.uniform();
    g.chi = 3.0;

    CounterStream channel_stream(rng(), rng(), StreamTag::channels);
    RandomInstance inst;
    inst.channels = generate_channel_set(g, n_elements, channel_stream);
    if (rng.uniform() < blocked_probability)
        inst.channels = block_direct_links(inst.channels);

    std::vector<double> phases(n_elements);
    for (double &p : phases)
        p = rng.phase();
    inst.phases = PhaseVector(std::move(phases));
    inst.pt_dbw = -20.0 + 40.0 * rng.uniform();
    inst.budget = LinkBudget::from_dbw(inst.pt_dbw, 1e-10);
    inst.k = std::size_t(rng() % n_elements);
    return inst;
}

std::size_t VerificationReport::passed() const noexcept
{
    return std::size_t(std::count_if(checks.begin(), checks.end(), [](const auto &c) { return c.passed; }));
}

namespace
{

std::string fmt(const char *format, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b);
    return buf;
}

double angle_distance(double a, double b)
{
    const double d = wrap_phase(a - b);
    return std::min(d, two_pi - d);
}

VerificationCheck coefficient_identity(std::uint64_t seed)
{
    CounterStream rng(seed, 1, StreamTag::test);
    const std::size_t sizes[] = {1, 2, 4, 8};
    double worst = 0.0;
    for (int t = 0; t < 200; ++t)
    {
        RandomInstance inst = random_instance(rng, sizes[t % 4]);
        for (Target target : {Target::bob, Target::eve})
        {
            const TrigCoefficients f = trig_coefficients(inst.channels, inst.phases, inst.k, inst.budget, target);
            const ComplexGain &direct = target == Target::bob ? inst.channels.h_d : inst.channels.h_e;
            const auto &cascade = target == Target::bob ? inst.channels.h_rd : inst.channels.h_re;
            for (int s = 0; s < 16; ++s)
            {
                const double phi = two_pi * s / 16.0;
                PhaseVector trial = inst.phases;
                trial.set(inst.k, phi);
                const double direct_eval =
                    1.0 + snr(effective_gain(direct, inst.channels.h_r, cascade, trial), inst.budget);
                worst = std::max(worst, std::abs(f(phi) - direct_eval) / direct_eval);
            }
        }
    }
    return {"coefficient-identity", worst <= 1e-9, fmt("max relative deviation %.3g (limit 1e-9)", worst)};
}

VerificationCheck element_optimality(std::uint64_t seed)
{
    CounterStream rng(seed, 2, StreamTag::test);
    const oracle::PhaseGrid grid(100'000);
    const ObjectiveConfig cfg(1.0);
    const OptimizerConfig opt;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t)
    {
        RandomInstance inst = random_instance(rng, 1 + t % 4);
        const double phi = optimize_element(inst.channels, inst.phases, inst.k, inst.budget, cfg, opt);
        PhaseVector trial = inst.phases;
        trial.set(inst.k, phi);
        const double g = objective_g(inst.channels, trial, inst.budget, cfg);
        const auto ref = oracle::grid_search_element(inst.channels, inst.phases, inst.k, inst.budget, cfg, grid);
        worst = std::max(worst, (ref.g - g) / ref.g);
    }
    return {"element-optimality", worst <= 1e-8, fmt("worst shortfall vs 1e5-point grid %.3g (limit 1e-8)", worst)};
}

VerificationCheck closed_form_alpha0(std::uint64_t seed)
{
    CounterStream rng(seed, 3, StreamTag::test);
    const ObjectiveConfig cfg(0.0);
    const OptimizerConfig opt;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t)
    {
        RandomInstance inst = random_instance(rng, 1 + t % 4);
        const TrigCoefficients num = trig_coefficients(inst.channels, inst.phases, inst.k, inst.budget, Target::bob);
        if (num.flat())
            continue;
        const double fast = optimize_element(inst.channels, inst.phases, inst.k, inst.budget, cfg, opt);
        const double numeric = detail::optimize_element_numeric(inst.channels, inst.phases, inst.k, inst.budget, cfg, opt);
        worst = std::max(worst, angle_distance(fast, numeric));
    }
    return {"alpha0-closed-form", worst <= 1e-6, fmt("max phase gap %.3g rad (limit 1e-6)", worst)};
}

VerificationCheck monotone_ascent(std::uint64_t seed)
{
    CounterStream rng(seed, 4, StreamTag::test);
    const double alphas[] = {0.0, 0.5, 1.0};
    double worst = 0.0;
    for (int t = 0; t < 200; ++t)
    {
        RandomInstance inst = random_instance(rng, 2);
        const auto res = optimize_phases(inst.channels, inst.budget, ObjectiveConfig(alphas[t % 3]), OptimizerConfig{});
        for (std::size_t i = 1; i < res.trace.size(); ++i)
            worst = std::max(worst, res.trace[i - 1] - res.trace[i]);
    }
    return {"monotone-ascent", worst <= 1e-12, fmt("largest decrease %.3g (limit 1e-12)", worst)};
}

VerificationCheck ao_vs_joint(std::uint64_t seed)
{
    CounterStream rng(seed, 5, StreamTag::test);
    const ObjectiveConfig cfg(1.0);
    int good = 0;
    const int total = 20;
    double worst = 1.0;
    for (int t = 0; t < total; ++t)
    {
        RandomInstance inst = random_instance(rng, 2);
        const double ao = optimize_phases(inst.channels, inst.budget, cfg, OptimizerConfig{}).objective;
        const double joint = oracle::joint_grid_search(inst.channels, inst.budget, cfg, {360, 2}).g;
        const double r = ao / joint;
        worst = std::min(worst, r);
        good += r >= 0.99 ? 1 : 0;
    }
    return {"ao-vs-joint-grid", good >= 19,
            fmt("%.0f of 20 within 1%% of the 360x360 optimum (need 19), worst ratio %.4f", good, worst)};
}

VerificationCheck channel_calibration(std::uint64_t seed)
{
    Geometry g{10.0, 20.0, 30.0, 40.0, 50.0, 3.0};
    const std::size_t draws = 100'000;
    double sums[5] = {0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < draws; ++i)
    {
        CounterStream stream(seed, i, StreamTag::channels);
        const ChannelSet c = generate_channel_set(g, 1, stream);
        sums[0] += c.h_r[0].magnitude * c.h_r[0].magnitude;
        sums[1] += c.h_rd[0].magnitude * c.h_rd[0].magnitude;
        sums[2] += c.h_re[0].magnitude * c.h_re[0].magnitude;
        sums[3] += c.h_d.magnitude * c.h_d.magnitude;
        sums[4] += c.h_e.magnitude * c.h_e.magnitude;
    }
    const double dist[5] = {g.d_br, g.d_rd, g.d_re, g.d_bd, g.d_be};
    double worst = 0.0;
    for (int r = 0; r < 5; ++r)
        worst = std::max(worst, std::abs(sums[r] / double(draws) / std::pow(dist[r], -g.chi) - 1.0));
    return {"channel-calibration", worst <= 0.02, fmt("max relative error of E|h|^2 %.3g (limit 0.02)", worst)};
}

VerificationCheck sweep_determinism(std::uint64_t seed)
{
    std::vector<Scenario> scenarios(2);
    scenarios[0].name = "ris";
    scenarios[0].geometry = find_geometry_preset("comparable")->geometry;
    scenarios[1].name = "no-ris";
    scenarios[1].geometry = scenarios[0].geometry;
    scenarios[1].n_elements = 0;
    SweepConfig sweep;
    sweep.pt_dbw = {-10.0, 0.0, 10.0};
    sweep.realizations = 200;
    sweep.seed = seed;
    const std::string one = format_csv(run_sweep(scenarios, sweep, 1));
    const std::string three = format_csv(run_sweep(scenarios, sweep, 3));
    const bool same_value = run_realization(scenarios[0], 0.0, 7, sweep) == run_realization(scenarios[0], 0.0, 7, sweep);
    return {"sweep-determinism", one == three && same_value,
            one == three ? "CSV identical for 1 and 3 workers" : "CSV differs between worker counts"};
}

} // namespace

VerificationReport run_verification(std::uint64_t seed)
{
    using CheckFn = VerificationCheck (*)(std::uint64_t);
    const std::pair<const char *, CheckFn> checks[] = {
        {"coefficient-identity", coefficient_identity}, {"element-optimality", element_optimality},
        {"alpha0-closed-form", closed_form_alpha0},     {"monotone-ascent", monotone_ascent},
        {"ao-vs-joint-grid", ao_vs_joint},              {"channel-calibration", channel_calibration},
        {"sweep-determinism", sweep_determinism},
    };

    VerificationReport report;
    for (const auto &[name, fn] : checks)
    {
        try
        {
            report.checks.push_back(fn(seed));
        }
        catch (const std::exception &e)
        {
            report.checks.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
    return report;
}

} // namespace risim
