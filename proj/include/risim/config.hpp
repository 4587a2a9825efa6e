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

#ifndef RISIM_CONFIG_HPP
#define RISIM_CONFIG_HPP

/*
Experiment configuration: a flat `key = value` document, one entry per line,
`#` starts a comment. Every key is optional; unknown or repeated keys are errors.

  geometry.chi                 path-loss exponent for every scenario        3
  geometry.<preset>.<d>        override distance <d> of a built-in preset
                               (<d> is d_br, d_rd, d_re, d_bd or d_be)
  sweep.pt_dbw                 comma list, or start:step:stop               -20:2:20
  sweep.n_o                    noise power in Watts                         1e-10
  sweep.realizations           channel realizations per point               10000
  sweep.seed                   64-bit seed                                  1
  sweep.sweeps                 optimizer passes over all elements           2
  sweep.grid_points            optimizer bracketing grid                    720
  sweep.refine_tol             optimizer phase tolerance (rad)              1e-9
  sweep.init                   zeros | random                               zeros
  scenario.<name>.geometry     preset the scenario starts from              bob-near
  scenario.<name>.<d>          distance override for this scenario
  scenario.<name>.chi          path-loss exponent for this scenario         geometry.chi
  scenario.<name>.n_elements   RIS size, 0 = no RIS                         2
  scenario.<name>.alpha        Eve weight seen by the optimizer, [0, 1]     1
  scenario.<name>.direct_links present | blocked                            present
  scenario.<name>.phase_policy optimized | random | zero                    optimized

Scenario names use letters, digits, '-' and '_'. When no scenario.* key is
present the built-in scenario set (default_scenarios) is used.
*/

#include "risim/montecarlo.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace risim
{

struct ExperimentConfig
{
    std::vector<Scenario> scenarios;
    SweepConfig sweep;

    bool operator==(const ExperimentConfig &) const = default;
};

// Throws ConfigError with the offending key and line
ExperimentConfig parse_config(std::string_view text);

// Reads and parses a file. Throws IoError naming the path if it cannot be read.
ExperimentConfig load_config(const std::filesystem::path &path);

// Canonical document that parses back to an equal configuration
std::string serialize_config(const ExperimentConfig &config);

// For every preset: optimized RIS with alpha = 1 and the no-RIS baseline, both with
// direct links. Additionally RIS with alpha = 0 and blocked links for every preset,
// and for bob-near RIS with alpha = 0 and direct links and RIS with alpha = 1 and
// blocked links.
std::vector<Scenario> default_scenarios(double chi = 3.0);

// Keeps the named scenarios in the order given. Throws ConfigError for unknown names.
void select_scenarios(ExperimentConfig &config, const std::vector<std::string> &names);

} // namespace risim

#endif
