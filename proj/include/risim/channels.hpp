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

#ifndef RISIM_CHANNELS_HPP
#define RISIM_CHANNELS_HPP

#include "risim/rng.hpp"

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace risim
{

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Maps any finite angle onto [0, 2*pi)
double wrap_phase(double phi) noexcept;

// Link distances in meters and the path-loss exponent shared by all links.
// Naming: b = Alice (base), r = RIS, d = Bob (destination), e = Eve.
struct Geometry
{
    double d_br = 1.0; // Alice -> RIS
    double d_rd = 1.0; // RIS -> Bob
    double d_re = 1.0; // RIS -> Eve
    double d_bd = 1.0; // Alice -> Bob
    double d_be = 1.0; // Alice -> Eve
    double chi = 3.0;

    // Throws DomainError naming the first non-positive field
    void validate() const;

    bool operator==(const Geometry &) const = default;
};

// Named layouts with Alice, Bob and Eve on a straight line near the RIS
struct GeometryPreset
{
    std::string_view name;
    std::string_view description;
    Geometry geometry;
};

std::span<const GeometryPreset> geometry_presets();

// Returns nullptr if the name is unknown
const GeometryPreset *find_geometry_preset(std::string_view name);

// A channel coefficient magnitude * exp(j * phase). The phase is the composite
// phase of the coefficient; no sign convention is applied on top of it.
struct ComplexGain
{
    double magnitude = 0.0;
    double phase = 0.0;

    // Validates magnitude >= 0 (DomainError) and wraps phase into [0, 2*pi)
    static ComplexGain make(double magnitude, double phase);

    std::complex<double> value() const { return std::polar(magnitude, phase); }

    bool operator==(const ComplexGain &) const = default;
};

// One realization of all five channels for an N-element RIS.
struct ChannelSet
{
    std::vector<ComplexGain> h_r;  // Alice -> RIS element i
    std::vector<ComplexGain> h_rd; // RIS element i -> Bob
    std::vector<ComplexGain> h_re; // RIS element i -> Eve
    ComplexGain h_d;               // Alice -> Bob
    ComplexGain h_e;               // Alice -> Eve

    std::size_t n_elements() const noexcept { return h_r.size(); }

    // Throws DimensionError if the three per-element vectors differ in length
    void validate() const;

    bool operator==(const ChannelSet &) const = default;
};

// d^(-chi/2). Throws DomainError for d <= 0 or chi <= 0.
double path_loss_amplitude(double d, double chi);

// Draws one realization from the stream: Rayleigh magnitudes with unit mean-square
// scaled by the path-loss amplitude, i.i.d. uniform phases. Draw order is h_d, h_e,
// then (h_r, h_rd, h_re) for each element, magnitude before phase, so realizations
// with different N share their direct-link draws. Throws DomainError for n_elements == 0.
ChannelSet generate_channel_set(const Geometry &geometry, std::size_t n_elements, CounterStream &stream);

// Copy with h_d and h_e set to magnitude 0, phase 0
ChannelSet block_direct_links(const ChannelSet &channels);

namespace detail
{
// generate_channel_set without the n_elements >= 1 precondition; n_elements == 0
// yields the direct links only (the no-RIS baseline).
ChannelSet draw_channels(const Geometry &geometry, std::size_t n_elements, CounterStream &stream);
} // namespace detail

} // namespace risim

#endif
