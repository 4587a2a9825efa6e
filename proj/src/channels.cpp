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

#include "risim/channels.hpp"
#include "risim/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace risim
{

double wrap_phase(double phi) noexcept
{
    double r = std::fmod(phi, two_pi);
    if (r < 0.0)
        r += two_pi;
    // -tiny + 2*pi can round up to 2*pi
    return r < two_pi ? r : 0.0;
}

void Geometry::validate() const
{
    const std::array<std::pair<const char *, double>, 6> fields{{{"d_br", d_br},
                                                                 {"d_rd", d_rd},
                                                                 {"d_re", d_re},
                                                                 {"d_bd", d_bd},
                                                                 {"d_be", d_be},
                                                                 {"chi", chi}}};
    for (const auto &[name, value] : fields)
        if (!(value > 0.0) || !std::isfinite(value))
            throw DomainError(std::string("geometry: ") + name + " must be positive and finite, got " + std::to_string(value));
}

namespace
{
// Alice at the origin, RIS at (10, 2), Bob and Eve on the x axis
constexpr double ris_x = 10.0, ris_y = 2.0;

Geometry line_layout(double bob_x, double eve_x)
{
    Geometry g;
    g.d_br = std::hypot(ris_x, ris_y);
    g.d_rd = std::hypot(bob_x - ris_x, ris_y);
    g.d_re = std::hypot(eve_x - ris_x, ris_y);
    g.d_bd = bob_x;
    g.d_be = eve_x;
    g.chi = 3.0;
    return g;
}
} // namespace

std::span<const GeometryPreset> geometry_presets()
{
    static const std::array<GeometryPreset, 3> presets{{
        {"bob-near", "Bob at x=20 m, Eve at x=40 m; Bob has the stronger direct link", line_layout(20.0, 40.0)},
        {"eve-near", "Bob at x=40 m, Eve at x=20 m; Eve has the stronger direct link", line_layout(40.0, 20.0)},
        {"comparable", "Bob at x=30 m, Eve at x=30.5 m; comparable average gains", line_layout(30.0, 30.5)},
    }};
    return presets;
}

const GeometryPreset *find_geometry_preset(std::string_view name)
{
    for (const auto &p : geometry_presets())
        if (p.name == name)
            return &p;
    return nullptr;
}

ComplexGain ComplexGain::make(double magnitude, double phase)
{
    if (!(magnitude >= 0.0) || !std::isfinite(magnitude))
        throw DomainError("complex gain magnitude must be finite and non-negative");
    if (!std::isfinite(phase))
        throw DomainError("complex gain phase must be finite");
    return ComplexGain{magnitude, wrap_phase(phase)};
}

void ChannelSet::validate() const
{
    if (h_rd.size() != h_r.size() || h_re.size() != h_r.size())
        throw DimensionError("channel set: h_r, h_rd and h_re lengths differ (" + std::to_string(h_r.size()) + ", " +
                             std::to_string(h_rd.size()) + ", " + std::to_string(h_re.size()) + ")");
}

double path_loss_amplitude(double d, double chi)
{
    if (!(d > 0.0) || !std::isfinite(d))
        throw DomainError("path loss: distance must be positive and finite");
    if (!(chi > 0.0) || !std::isfinite(chi))
        throw DomainError("path loss: exponent must be positive and finite");
    return std::pow(d, -0.5 * chi);
}

namespace detail
{
ChannelSet draw_channels(const Geometry &geometry, std::size_t n_elements, CounterStream &stream)
{
    geometry.validate();

    const double pl_br = path_loss_amplitude(geometry.d_br, geometry.chi);
    const double pl_rd = path_loss_amplitude(geometry.d_rd, geometry.chi);
    const double pl_re = path_loss_amplitude(geometry.d_re, geometry.chi);
    const double pl_bd = path_loss_amplitude(geometry.d_bd, geometry.chi);
    const double pl_be = path_loss_amplitude(geometry.d_be, geometry.chi);

    auto draw = [&stream](double scale) {
        const double mag = scale * stream.rayleigh_unit_power();
        return ComplexGain{mag, stream.phase()};
    };

    ChannelSet out;
    out.h_d = draw(pl_bd);
    out.h_e = draw(pl_be);
    out.h_r.reserve(n_elements);
    out.h_rd.reserve(n_elements);
    out.h_re.reserve(n_elements);
    for (std::size_t i = 0; i < n_elements; ++i)
    {
        out.h_r.push_back(draw(pl_br));
        out.h_rd.push_back(draw(pl_rd));
        out.h_re.push_back(draw(pl_re));
    }
    return out;
}
} // namespace detail

ChannelSet generate_channel_set(const Geometry &geometry, std::size_t n_elements, CounterStream &stream)
{
    if (n_elements == 0)
        throw DomainError("generate_channel_set: n_elements must be at least 1");
    return detail::draw_channels(geometry, n_elements, stream);
}

ChannelSet block_direct_links(const ChannelSet &channels)
{
    ChannelSet out = channels;
    out.h_d = ComplexGain{};
    out.h_e = ComplexGain{};
    return out;
}

} // namespace risim
