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

#ifndef RISIM_REPORT_HPP
#define RISIM_REPORT_HPP

#include "risim/montecarlo.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace risim
{

inline constexpr std::string_view csv_header =
    "scenario,alpha,direct_links,n_elements,pt_dbw,realizations,mean_secrecy_bpcu,stderr_bpcu";

// Header plus one row per (scenario, power), rows sorted by scenario name then
// ascending power, reals with 12 significant digits. Throws DomainError if empty.
std::string format_csv(const SweepResult &result);

// Writes format_csv(result). Throws IoError naming the path on failure.
void emit_csv(const SweepResult &result, const std::filesystem::path &path);

} // namespace risim

#endif
