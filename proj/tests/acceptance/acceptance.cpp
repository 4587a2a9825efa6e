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

// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
// Reference values come from the cartesian oracles in support/helpers.hpp and
// the local brute-force searches, never from the library's expansions.

#include "risim/config.hpp"
#include "risim/montecarlo.hpp"
#include "risim/optimizer.hpp"
#include "risim/report.hpp"
#include "risim/verify.hpp"

#include "support/helpers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace risim;

namespace
{

constexpr std::uint64_t seed = 20260101;

// Pinned tolerances
constexpr double coefficient_rel_tol = 1e-9;
constexpr double element_rel_tol = 1e-8;
constexpr double closed_form_tol_rad = 1e-6;
constexpr double ascent_abs_tol = 1e-12;
constexpr double ao_ratio = 0.99;
constexpr int ao_required = 95;
constexpr double calibration_rel_tol = 0.02;
constexpr double magnitude_band = 10.0;

int failures = 0;

void report(int id, bool pass, const std::string &what, const std::string &detail)
{
    std::printf("%s criterion %d: %s: %s\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += pass ? 0 : 1;
}

template <typename... Args>
std::string fmt(const char *format, Args... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double angle_distance(double a, double b)
{
    const double d = wrap_phase(a - b);
    return std::min(d, two_pi - d);
}

// Element k split as rest + coupled * e^{j phi}, built from the raw channels
struct Split
{
    std::complex<double> rest, coupled;
};

Split split(const ChannelSet &c, const PhaseVector &phases, std::size_t k, bool bob)
{
    const ComplexGain &direct = bob ? c.h_d : c.h_e;
    const auto &cascade = bob ? c.h_rd : c.h_re;
    std::vector<double> others = test::to_vector(phases);
    others[k] = 0.0;
    std::vector<ComplexGain> a = c.h_r, b = cascade;
    a[k] = ComplexGain{0.0, 0.0};
    const test::Cart r = test::brute_gain(direct, a, b, others);
    const test::Cart cp = test::mul(test::cart(c.h_r[k]), test::cart(cascade[k]));
    return {{r.re, r.im}, {cp.re, cp.im}};
}

// 1 + s |rest + coupled e^{j phi}|^2 at precomputed (cos, sin)
double level(const Split &sp, double s, double cs, double sn)
{
    const double re = sp.rest.real() + sp.coupled.real() * cs - sp.coupled.imag() * sn;
    const double im = sp.rest.imag() + sp.coupled.real() * sn + sp.coupled.imag() * cs;
    return 1.0 + s * (re * re + im * im);
}

std::vector<double> sorted(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

double quantile(const std::vector<double> &s, double q)
{
    return s[std::size_t(std::lround(q * double(s.size() - 1)))];
}

// ---------------------------------------------------------------------------

void criterion1()
{
    CounterStream rng(seed, 1, StreamTag::test);
    const std::size_t sizes[] = {1, 2, 4, 8};
    double worst = 0.0;
    std::size_t evaluations = 0;
    for (int t = 0; t < 1000; ++t)
    {
        const RandomInstance inst = random_instance(rng, sizes[t % 4]);
        const double s = inst.budget.snr_scale();
        for (bool bob : {true, false})
        {
            const TrigCoefficients f = trig_coefficients(inst.channels, inst.phases, inst.k, inst.budget,
                                                         bob ? Target::bob : Target::eve);
            std::vector<double> phases = test::to_vector(inst.phases);
            for (int j = 0; j < 16; ++j)
            {
                phases[inst.k] = two_pi * j / 16.0;
                const test::Cart g = bob ? test::brute_gain(inst.channels.h_d, inst.channels.h_r, inst.channels.h_rd, phases)
                                         : test::brute_gain(inst.channels.h_e, inst.channels.h_r, inst.channels.h_re, phases);
                const double direct = 1.0 + s * (g.re * g.re + g.im * g.im);
                worst = std::max(worst, test::rel_diff(f(phases[inst.k]), direct));
                ++evaluations;
            }
        }
    }
    report(1, worst <= coefficient_rel_tol, "trig coefficients reproduce 1 + SNR",
           fmt("%zu evaluations over N in {1,2,4,8}, Bob and Eve; max relative error %.3g (tol %.0e)", evaluations,
               worst, coefficient_rel_tol));
}

void criterion2()
{
    const std::size_t grid_points = 1'000'000;
    std::vector<double> cs(grid_points), sn(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i)
    {
        const double phi = two_pi * double(i) / double(grid_points);
        cs[i] = std::cos(phi);
        sn[i] = std::sin(phi);
    }

    CounterStream rng(seed, 2, StreamTag::test);
    double worst = -INFINITY;
    for (int t = 0; t < 1000; ++t)
    {
        const RandomInstance inst = random_instance(rng, 1 + t % 4);
        const double s = inst.budget.snr_scale();
        const Split bob = split(inst.channels, inst.phases, inst.k, true);
        const Split eve = split(inst.channels, inst.phases, inst.k, false);
        double best = 0.0;
        for (std::size_t i = 0; i < grid_points; ++i)
            best = std::max(best, level(bob, s, cs[i], sn[i]) / level(eve, s, cs[i], sn[i]));

        const double phi = optimize_element(inst.channels, inst.phases, inst.k, inst.budget, ObjectiveConfig(1.0),
                                            OptimizerConfig{});
        std::vector<double> phases = test::to_vector(inst.phases);
        phases[inst.k] = phi;
        const double got = test::brute_g(inst.channels, phases, s, 1.0);
        worst = std::max(worst, (best - got) / best);
    }

    CounterStream rng0(seed, 3, StreamTag::test);
    double worst_rad = 0.0;
    int compared = 0;
    for (int t = 0; t < 1000; ++t)
    {
        const RandomInstance inst = random_instance(rng0, 1 + t % 4);
        const Split bob = split(inst.channels, inst.phases, inst.k, true);
        const std::complex<double> x = bob.coupled * std::conj(bob.rest);
        const double b_d = 2.0 * inst.budget.snr_scale() * x.real();
        const double c_d = -2.0 * inst.budget.snr_scale() * x.imag();
        if (b_d == 0.0 && c_d == 0.0)
            continue;
        const double phi = optimize_element(inst.channels, inst.phases, inst.k, inst.budget, ObjectiveConfig(0.0),
                                            OptimizerConfig{});
        worst_rad = std::max(worst_rad, angle_distance(phi, std::atan2(c_d, b_d)));
        ++compared;
    }

    report(2, worst <= element_rel_tol && worst_rad <= closed_form_tol_rad, "element optimizer vs 1e6-point grid",
           fmt("alpha=1, 1000 instances: worst shortfall %.3g (tol %.0e); alpha=0, %d instances: max |phi - "
               "atan2(C_d,B_d)| %.3g rad (tol %.0e)",
               worst, element_rel_tol, compared, worst_rad, closed_form_tol_rad));
}

void criterion3()
{
    CounterStream rng(seed, 4, StreamTag::test);
    const double alphas[] = {1.0, 0.0, 0.5, 0.25};
    double worst_drop = 0.0, worst_consistency = 0.0;
    for (int t = 0; t < 1000; ++t)
    {
        const RandomInstance inst = random_instance(rng, 2);
        OptimizerConfig opt;
        opt.sweeps = 2;
        const double alpha = alphas[t % 4];
        const auto res = optimize_phases(inst.channels, inst.budget, ObjectiveConfig(alpha), opt);
        for (std::size_t i = 1; i < res.trace.size(); ++i)
            worst_drop = std::max(worst_drop, res.trace[i - 1] - res.trace[i]);
        worst_consistency = std::max(
            worst_consistency,
            test::rel_diff(res.objective, test::brute_g(inst.channels, test::to_vector(res.phases),
                                                        inst.budget.snr_scale(), alpha)));
    }
    report(3, worst_drop <= ascent_abs_tol && worst_consistency <= 1e-10, "alternating ascent never decreases g",
           fmt("1000 runs, N=2, 2 sweeps: largest decrease %.3g (tol %.0e); final g vs oracle %.3g (tol 1e-10)",
               worst_drop, ascent_abs_tol, worst_consistency));
}

void criterion4()
{
    const int n = 360;
    std::vector<std::complex<double>> phasor(n);
    for (int i = 0; i < n; ++i)
        phasor[i] = std::polar(1.0, two_pi * i / n);

    const char *presets[] = {"bob-near", "eve-near", "comparable"};
    const double powers[] = {-20.0, -10.0, 0.0, 10.0, 20.0};
    SweepConfig sweep;
    sweep.seed = seed;
    std::vector<double> gaps;
    int good = 0;
    for (int t = 0; t < 100; ++t)
    {
        Scenario sc;
        sc.name = "c4";
        sc.geometry = find_geometry_preset(presets[t % 3])->geometry;
        sc.n_elements = 2;
        const ChannelSet c = realization_channels(sc, sweep.seed, std::uint64_t(t));
        const LinkBudget budget = LinkBudget::from_dbw(powers[t % 5], sweep.n_o);
        const double s = budget.snr_scale();

        // joint grid on the raw channels
        const std::complex<double> hd = c.h_d.value(), he = c.h_e.value();
        const std::complex<double> bob0 = c.h_r[0].value() * c.h_rd[0].value(),
                                   bob1 = c.h_r[1].value() * c.h_rd[1].value();
        const std::complex<double> eve0 = c.h_r[0].value() * c.h_re[0].value(),
                                   eve1 = c.h_r[1].value() * c.h_re[1].value();
        double joint = 0.0;
        for (int i = 0; i < n; ++i)
        {
            const std::complex<double> b = hd + bob0 * phasor[i], e = he + eve0 * phasor[i];
            for (int j = 0; j < n; ++j)
            {
                const double g = (1.0 + s * std::norm(b + bob1 * phasor[j])) / (1.0 + s * std::norm(e + eve1 * phasor[j]));
                joint = std::max(joint, g);
            }
        }

        const auto ao = optimize_phases(c, budget, ObjectiveConfig(1.0), OptimizerConfig{});
        const double g = test::brute_g(c, test::to_vector(ao.phases), s, 1.0);
        good += g >= ao_ratio * joint ? 1 : 0;
        gaps.push_back(1.0 - g / joint);
    }
    const auto q = sorted(gaps);
    const auto below = std::count_if(q.begin(), q.end(), [](double x) { return x < 0.0; });
    report(4, good >= ao_required, "alternating optimization vs 360x360 joint grid",
           fmt("%d/100 reach %.2f of the grid optimum (need %d); gap 1 - g_AO/g_grid: min %.3g, median %.3g, "
               "p90 %.3g, p99 %.3g, max %.3g; AO above grid in %ld",
               good, ao_ratio, ao_required, q.front(), quantile(q, 0.5), quantile(q, 0.9), quantile(q, 0.99),
               q.back(), long(below)));
}

using Curves = std::map<std::string, std::vector<double>>;

Curves curves(const SweepResult &r)
{
    Curves out;
    for (const auto &row : r.rows)
        out[row.scenario].push_back(row.mean_secrecy);
    return out;
}

void criterion5(const Curves &c)
{
    bool all = true;
    std::string detail;
    for (const char *p : {"bob-near", "eve-near", "comparable"})
    {
        const auto &ris = c.at(std::string(p) + "-ris-a1-direct");
        const auto &base = c.at(std::string(p) + "-no-ris-direct");
        int wins = 0;
        double min_margin = INFINITY;
        for (std::size_t i = 0; i < ris.size(); ++i)
        {
            wins += ris[i] > base[i] ? 1 : 0;
            min_margin = std::min(min_margin, ris[i] - base[i]);
        }
        all = all && wins == int(ris.size());
        detail += fmt("%s %d/%zu (min margin %.3g bpcu); ", p, wins, ris.size(), min_margin);
    }
    detail.resize(detail.size() - 2);
    report(5, all, "RIS (alpha=1, direct links) beats no-RIS at every power, 1e4 realizations", detail);
}

void criterion6(const Curves &c)
{
    const auto &a1 = c.at("bob-near-ris-a1-direct");
    const auto &a0 = c.at("bob-near-ris-a0-direct");
    const auto &a1_blk = c.at("bob-near-ris-a1-blocked");
    bool a = true, b = true;
    double min_gap = INFINITY, lo_ratio = INFINITY, hi_ratio = 0.0;
    for (std::size_t i = 0; i < a1.size(); ++i)
    {
        a = a && a1[i] >= a0[i];
        min_gap = std::min(min_gap, a1[i] - a0[i]);
        const double r = a1_blk[i] / a0[i];
        b = b && r >= 1.0 / magnitude_band && r <= magnitude_band;
        lo_ratio = std::min(lo_ratio, r);
        hi_ratio = std::max(hi_ratio, r);
    }

    std::string which;
    double c_margin = -INFINITY;
    for (const char *p : {"bob-near", "eve-near", "comparable"})
    {
        const auto &blk = c.at(std::string(p) + "-ris-a0-blocked");
        const auto &base = c.at(std::string(p) + "-no-ris-direct");
        double worst = -INFINITY;
        for (std::size_t i = 0; i < blk.size(); ++i)
            worst = std::max(worst, blk[i] - base[i]);
        if (worst <= 0.0 && which.empty())
        {
            which = p;
            c_margin = worst;
        }
    }
    const bool cc = !which.empty();

    report(6, a && b && cc, "bob-near orderings",
           fmt("(a) alpha=1 >= alpha=0 with direct links: %s, min gap %.3g bpcu; (b) blocked alpha=1 / direct "
               "alpha=0 in [%.3g, %.3g], band [0.1, 10]: %s; (c) RIS blocked alpha=0 <= no-RIS at all powers: %s%s",
               a ? "yes" : "no", min_gap, lo_ratio, hi_ratio, b ? "yes" : "no", cc ? which.c_str() : "none",
               cc ? fmt(" (max excess %.3g bpcu)", c_margin).c_str() : ""));
}

void criterion7()
{
    const Geometry g{10.0, 20.0, 30.0, 40.0, 50.0, 3.0};
    const std::size_t draws = 100'000;
    double sums[5] = {};
    for (std::size_t i = 0; i < draws; ++i)
    {
        CounterStream stream(seed, i, StreamTag::channels);
        const ChannelSet c = generate_channel_set(g, 1, stream);
        const ComplexGain *roles[5] = {&c.h_r[0], &c.h_rd[0], &c.h_re[0], &c.h_d, &c.h_e};
        for (int r = 0; r < 5; ++r)
            sums[r] += roles[r]->magnitude * roles[r]->magnitude;
    }
    const char *names[5] = {"h_r", "h_rd", "h_re", "h_d", "h_e"};
    const double dist[5] = {g.d_br, g.d_rd, g.d_re, g.d_bd, g.d_be};
    bool ok = true;
    std::string detail;
    for (int r = 0; r < 5; ++r)
    {
        const double err = sums[r] / double(draws) / std::pow(dist[r], -g.chi) - 1.0;
        ok = ok && std::abs(err) <= calibration_rel_tol;
        detail += fmt("%s %+.4f, ", names[r], err);
    }
    detail += fmt("tol %.2f", calibration_rel_tol);
    report(7, ok, "E|h|^2 matches d^-chi over 1e5 draws (relative error)", detail);
}

} // namespace

int main()
{
    const auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();

    // the shipped defaults, seed included
    const ExperimentConfig cfg = parse_config("");
    const SweepResult first = run_sweep(cfg.scenarios, cfg.sweep, 1);
    const SweepResult second = run_sweep(cfg.scenarios, cfg.sweep, 4);
    const Curves c = curves(first);
    criterion5(c);
    criterion6(c);
    criterion7();

    const std::string a = format_csv(first), b = format_csv(second);
    report(8, a == b, "default sweep CSV is byte-identical across worker counts",
           fmt("%zu rows, %zu bytes, 1 worker vs 4 workers, seed %llu: %s", first.rows.size(), a.size(),
               (unsigned long long)cfg.sweep.seed, a == b ? "identical" : "different"));

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d of 8 criteria failed (%.1f s)\n", failures, secs);
    return failures == 0 ? 0 : 1;
}
