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

#include "risim/report.hpp"
#include "risim/errors.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace risim
{

namespace
{
std::string real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}
} // namespace

std::string format_csv(const SweepResult &result)
{
    if (result.rows.empty())
        throw DomainError("format_csv: no rows to write");

    std::vector<const SweepRow *> order;
    order.reserve(result.rows.size());
    for (const auto &row : result.rows)
        order.push_back(&row);
    std::stable_sort(order.begin(), order.end(), [](const SweepRow *a, const SweepRow *b) {
        if (a->scenario != b->scenario)
            return a->scenario < b->scenario;
        return a->pt_dbw < b->pt_dbw;
    });

    std::string out(csv_header);
    out += '\n';
    for (const SweepRow *r : order)
    {
        out += r->scenario;
        out += ',' + real(r->alpha);
        out += ',';
        out += to_string(r->direct_links);
        out += ',' + std::to_string(r->n_elements);
        out += ',' + real(r->pt_dbw);
        out += ',' + std::to_string(r->realizations);
        out += ',' + real(r->mean_secrecy);
        out += ',' + real(r->stderr_secrecy);
        out += '\n';
    }
    return out;
}

void emit_csv(const SweepResult &result, const std::filesystem::path &path)
{
    const std::string text = format_csv(result);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing: " + std::strerror(errno));
    out.write(text.data(), std::streamsize(text.size()));
    out.close();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

} // namespace risim
