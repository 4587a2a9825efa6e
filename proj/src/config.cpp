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

#include "risim/config.hpp"
#include "risim/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace risim
{

namespace
{

struct Entry
{
    std::string value;
    std::size_t line;
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

bool valid_name(std::string_view name)
{
    return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
    });
}

// Typed access to one entry with key/line-tagged errors
class Reader
{
public:
    Reader(const std::string &key, const Entry &e) : key_(key), entry_(e) {}

    [[noreturn]] void fail(const std::string &message) const { throw ConfigError(key_, entry_.line, message); }

    double real(std::string_view text) const
    {
        text = trim(text);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
            fail("expected a finite number, got '" + std::string(text) + "'");
        return v;
    }
    double real() const { return real(entry_.value); }

    double positive() const
    {
        const double v = real();
        if (!(v > 0.0))
            fail("must be positive, got " + entry_.value);
        return v;
    }

    std::uint64_t unsigned_integer() const
    {
        const std::string_view text = trim(entry_.value);
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
            fail("expected a non-negative integer, got '" + entry_.value + "'");
        return v;
    }

    std::uint64_t at_least(std::uint64_t lo) const
    {
        const std::uint64_t v = unsigned_integer();
        if (v < lo)
            fail("must be at least " + std::to_string(lo) + ", got " + entry_.value);
        return v;
    }

    template <typename Enum, std::size_t K>
    Enum choice(const std::pair<const char *, Enum> (&options)[K]) const
    {
        std::string allowed;
        for (const auto &[name, value] : options)
        {
            if (entry_.value == name)
                return value;
            allowed += allowed.empty() ? name : std::string(" | ") + name;
        }
        fail("expected one of " + allowed + ", got '" + entry_.value + "'");
    }

    std::vector<double> power_grid() const
    {
        std::vector<double> grid;
        if (entry_.value.find(':') != std::string::npos)
        {
            const auto parts = split(entry_.value, ':');
            if (parts.size() != 3)
                fail("range must be start:step:stop");
            const double start = real(parts[0]), step = real(parts[1]), stop = real(parts[2]);
            if (!(step > 0.0) || stop < start)
                fail("range needs step > 0 and stop >= start");
            const double span = (stop - start) / step;
            if (span > 1e6)
                fail("range has too many points");
            const auto count = std::size_t(std::floor(span + 1e-9)) + 1;
            for (std::size_t i = 0; i < count; ++i)
                grid.push_back(start + double(i) * step);
        }
        else
        {
            for (auto part : split(entry_.value, ','))
                grid.push_back(real(part));
        }
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (!(grid[i] > grid[i - 1]))
                fail("powers must be strictly ascending");
        return grid;
    }

private:
    const std::string &key_;
    const Entry &entry_;
};

constexpr std::pair<const char *, DirectLinks> direct_link_options[] = {{"present", DirectLinks::present},
                                                                        {"blocked", DirectLinks::blocked}};
constexpr std::pair<const char *, PhasePolicy> phase_policy_options[] = {
    {"optimized", PhasePolicy::optimized}, {"random", PhasePolicy::random}, {"zero", PhasePolicy::zero}};
constexpr std::pair<const char *, PhaseInit> init_options[] = {{"zeros", PhaseInit::zeros}, {"random", PhaseInit::random}};

double *distance_field(Geometry &g, std::string_view field)
{
    if (field == "d_br")
        return &g.d_br;
    if (field == "d_rd")
        return &g.d_rd;
    if (field == "d_re")
        return &g.d_re;
    if (field == "d_bd")
        return &g.d_bd;
    if (field == "d_be")
        return &g.d_be;
    return nullptr;
}

std::string number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

using PresetTable = std::map<std::string, Geometry, std::less<>>;

std::vector<Scenario> build_default_scenarios(const PresetTable &presets, double chi)
{
    std::vector<Scenario> out;
    auto add = [&](std::string_view preset, const char *suffix, std::size_t n, double alpha, DirectLinks links) {
        Scenario s;
        s.name = std::string(preset) + suffix;
        s.geometry = presets.find(preset)->second;
        s.geometry.chi = chi;
        s.n_elements = n;
        s.alpha = alpha;
        s.direct_links = links;
        s.phase_policy = PhasePolicy::optimized;
        out.push_back(std::move(s));
    };
    for (const auto &p : geometry_presets())
    {
        add(p.name, "-ris-a1-direct", 2, 1.0, DirectLinks::present);
        add(p.name, "-no-ris-direct", 0, 1.0, DirectLinks::present);
        add(p.name, "-ris-a0-blocked", 2, 0.0, DirectLinks::blocked);
        if (p.name == "bob-near")
        {
            add(p.name, "-ris-a0-direct", 2, 0.0, DirectLinks::present);
            add(p.name, "-ris-a1-blocked", 2, 1.0, DirectLinks::blocked);
        }
    }
    return out;
}

} // namespace

std::vector<Scenario> default_scenarios(double chi)
{
    PresetTable table;
    for (const auto &p : geometry_presets())
        table.emplace(std::string(p.name), p.geometry);
    return build_default_scenarios(table, chi);
}

ExperimentConfig parse_config(std::string_view text)
{
    // Pass 1: collect entries in document order
    std::vector<std::pair<std::string, Entry>> entries;
    std::map<std::string, std::size_t> seen;
    std::size_t line_no = 0;
    for (auto raw : split(text, '\n'))
    {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        const auto line = trim(raw);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("", line_no, "expected 'key = value', got '" + std::string(line) + "'");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ConfigError("", line_no, "missing key before '='");
        if (value.empty())
            throw ConfigError(key, line_no, "missing value");
        if (auto it = seen.find(key); it != seen.end())
            throw ConfigError(key, line_no, "duplicate key (first set on line " + std::to_string(it->second) + ")");
        seen.emplace(key, line_no);
        entries.emplace_back(std::move(key), Entry{std::move(value), line_no});
    }

    // Pass 2: global keys
    ExperimentConfig cfg;
    cfg.sweep.pt_dbw = SweepConfig::default_pt_grid();
    double chi = 3.0;
    PresetTable presets;
    for (const auto &p : geometry_presets())
        presets.emplace(std::string(p.name), p.geometry);

    struct PendingScenario
    {
        std::string name;
        std::vector<std::pair<std::string, const Entry *>> fields; // (field, entry)
    };
    std::vector<PendingScenario> pending;

    for (const auto &[key, entry] : entries)
    {
        const Reader r(key, entry);
        const auto parts = split(key, '.');
        if (parts[0] == "geometry")
        {
            if (parts.size() == 2 && parts[1] == "chi")
                chi = r.positive();
            else if (parts.size() == 3)
            {
                const auto it = presets.find(parts[1]);
                if (it == presets.end())
                    r.fail("unknown geometry preset '" + std::string(parts[1]) + "'");
                double *field = distance_field(it->second, parts[2]);
                if (!field)
                    r.fail("unknown geometry field '" + std::string(parts[2]) + "'");
                *field = r.positive();
            }
            else
                r.fail("unknown key");
        }
        else if (parts[0] == "sweep" && parts.size() == 2)
        {
            const auto f = parts[1];
            if (f == "pt_dbw")
                cfg.sweep.pt_dbw = r.power_grid();
            else if (f == "n_o")
                cfg.sweep.n_o = r.positive();
            else if (f == "realizations")
                cfg.sweep.realizations = std::size_t(r.at_least(1));
            else if (f == "seed")
                cfg.sweep.seed = r.unsigned_integer();
            else if (f == "sweeps")
            {
                const auto v = r.at_least(1);
                if (v > 1'000'000)
                    r.fail("must be at most 1000000");
                cfg.sweep.optimizer.sweeps = unsigned(v);
            }
            else if (f == "grid_points")
            {
                const auto v = r.at_least(8);
                if (v > 100'000'000)
                    r.fail("must be at most 100000000");
                cfg.sweep.optimizer.grid_points = unsigned(v);
            }
            else if (f == "refine_tol")
                cfg.sweep.optimizer.refine_tol = r.positive();
            else if (f == "init")
                cfg.sweep.optimizer.init = r.choice(init_options);
            else
                r.fail("unknown key");
        }
        else if (parts[0] == "scenario" && parts.size() == 3)
        {
            if (!valid_name(parts[1]))
                r.fail("scenario names may only contain letters, digits, '-' and '_'");
            auto it = std::find_if(pending.begin(), pending.end(), [&](const auto &p) { return p.name == parts[1]; });
            if (it == pending.end())
            {
                pending.push_back({std::string(parts[1]), {}});
                it = std::prev(pending.end());
            }
            it->fields.emplace_back(std::string(parts[2]), &entry);
        }
        else
            throw ConfigError(key, entry.line, "unknown key");
    }

    // Pass 3: scenarios, now that presets and chi are final
    if (pending.empty())
        cfg.scenarios = build_default_scenarios(presets, chi);
    for (const auto &ps : pending)
    {
        Scenario s;
        s.name = ps.name;
        const std::string prefix = "scenario." + ps.name + ".";

        // The base preset applies before any distance override, wherever it appears
        std::string preset = "bob-near";
        for (const auto &[field, entry] : ps.fields)
            if (field == "geometry")
            {
                if (!presets.count(entry->value))
                    throw ConfigError(prefix + field, entry->line, "unknown geometry preset '" + entry->value + "'");
                preset = entry->value;
            }
        s.geometry = presets.at(preset);
        s.geometry.chi = chi;

        for (const auto &[field, entry] : ps.fields)
        {
            const std::string key = prefix + field;
            const Reader r(key, *entry);
            if (field == "geometry")
                continue;
            if (double *d = distance_field(s.geometry, field))
                *d = r.positive();
            else if (field == "chi")
                s.geometry.chi = r.positive();
            else if (field == "n_elements")
            {
                const auto v = r.unsigned_integer();
                if (v > 4096)
                    r.fail("must be at most 4096");
                s.n_elements = std::size_t(v);
            }
            else if (field == "alpha")
            {
                const double a = r.real();
                if (!(a >= 0.0 && a <= 1.0))
                    r.fail("alpha must lie in [0, 1], got " + entry->value);
                s.alpha = a;
            }
            else if (field == "direct_links")
                s.direct_links = r.choice(direct_link_options);
            else if (field == "phase_policy")
                s.phase_policy = r.choice(phase_policy_options);
            else
                r.fail("unknown key");
        }
        cfg.scenarios.push_back(std::move(s));
    }

    try
    {
        cfg.sweep.validate();
        for (const auto &s : cfg.scenarios)
            s.validate();
    }
    catch (const DomainError &e)
    {
        throw ConfigError("", 0, e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config file '" + path.string() + "': " + std::strerror(errno));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("error while reading config file '" + path.string() + "'");
    return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig &config)
{
    std::ostringstream out;
    const SweepConfig &sw = config.sweep;
    out << "# risim experiment configuration\n";
    out << "sweep.pt_dbw = ";
    for (std::size_t i = 0; i < sw.pt_dbw.size(); ++i)
        out << (i ? "," : "") << number(sw.pt_dbw[i]);
    out << "\n";
    out << "sweep.n_o = " << number(sw.n_o) << "\n";
    out << "sweep.realizations = " << sw.realizations << "\n";
    out << "sweep.seed = " << sw.seed << "\n";
    out << "sweep.sweeps = " << sw.optimizer.sweeps << "\n";
    out << "sweep.grid_points = " << sw.optimizer.grid_points << "\n";
    out << "sweep.refine_tol = " << number(sw.optimizer.refine_tol) << "\n";
    out << "sweep.init = " << to_string(sw.optimizer.init) << "\n";
    for (const auto &s : config.scenarios)
    {
        const std::string p = "scenario." + s.name + ".";
        out << "\n";
        out << p << "d_br = " << number(s.geometry.d_br) << "\n";
        out << p << "d_rd = " << number(s.geometry.d_rd) << "\n";
        out << p << "d_re = " << number(s.geometry.d_re) << "\n";
        out << p << "d_bd = " << number(s.geometry.d_bd) << "\n";
        out << p << "d_be = " << number(s.geometry.d_be) << "\n";
        out << p << "chi = " << number(s.geometry.chi) << "\n";
        out << p << "n_elements = " << s.n_elements << "\n";
        out << p << "alpha = " << number(s.alpha) << "\n";
        out << p << "direct_links = " << to_string(s.direct_links) << "\n";
        out << p << "phase_policy = " << to_string(s.phase_policy) << "\n";
    }
    return out.str();
}

void select_scenarios(ExperimentConfig &config, const std::vector<std::string> &names)
{
    std::vector<Scenario> picked;
    for (const auto &name : names)
    {
        const auto it = std::find_if(config.scenarios.begin(), config.scenarios.end(),
                                     [&](const Scenario &s) { return s.name == name; });
        if (it == config.scenarios.end())
            throw ConfigError(name, 0, "no scenario with this name");
        picked.push_back(*it);
    }
    config.scenarios = std::move(picked);
}

} // namespace risim
