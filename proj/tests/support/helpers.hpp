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

#ifndef RISIM_TESTS_HELPERS_HPP
#define RISIM_TESTS_HELPERS_HPP

// Test-only helpers. The evaluations here work on raw cartesian arithmetic so
// they stay independent of the library's own routines.

#include "risim/channels.hpp"
#include "risim/metrics.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace risim::test
{

// N elements, every channel 1 at phase 0
inline ChannelSet unit_channels(std::size_t n, bool blocked_direct)
{
    ChannelSet c;
    c.h_r.assign(n, ComplexGain{1.0, 0.0});
    c.h_rd.assign(n, ComplexGain{1.0, 0.0});
    c.h_re.assign(n, ComplexGain{1.0, 0.0});
    c.h_d = blocked_direct ? ComplexGain{} : ComplexGain{1.0, 0.0};
    c.h_e = blocked_direct ? ComplexGain{} : ComplexGain{1.0, 0.0};
    return c;
}

struct Cart
{
    double re, im;
};

inline Cart cart(const ComplexGain &g)
{
    return {g.magnitude * std::cos(g.phase), g.magnitude * std::sin(g.phase)};
}

inline Cart mul(Cart a, Cart b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// direct + sum a_i e^{j phi_i} b_i, term by term in cartesian form
inline Cart brute_gain(const ComplexGain &direct, const std::vector<ComplexGain> &a, const std::vector<ComplexGain> &b,
                       const std::vector<double> &phases)
{
    Cart sum = cart(direct);
    for (std::size_t i = 0; i < phases.size(); ++i)
    {
        const Cart t = mul(mul(cart(a[i]), Cart{std::cos(phases[i]), std::sin(phases[i])}), cart(b[i]));
        sum.re += t.re;
        sum.im += t.im;
    }
    return sum;
}

// (1 + s|bob|^2) / (1 + s|eve|^2)^alpha from the brute-force gains
inline double brute_g(const ChannelSet &c, const std::vector<double> &phases, double s, double alpha)
{
    const Cart bob = brute_gain(c.h_d, c.h_r, c.h_rd, phases);
    const Cart eve = brute_gain(c.h_e, c.h_r, c.h_re, phases);
    const double nb = 1.0 + s * (bob.re * bob.re + bob.im * bob.im);
    const double ne = 1.0 + s * (eve.re * eve.re + eve.im * eve.im);
    return nb / std::pow(ne, alpha);
}

inline std::vector<double> to_vector(const PhaseVector &p)
{
    return {p.values().begin(), p.values().end()};
}

inline double rel_diff(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

} // namespace risim::test

#endif
