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

#include "risim/risim.h"

#include "risim/config.hpp"
#include "risim/errors.hpp"
#include "risim/montecarlo.hpp"
#include "risim/optimizer.hpp"
#include "risim/report.hpp"
#include "risim/verify.hpp"

#include <cstring>
#include <memory>
#include <string>

struct risim_config
{
    risim::ExperimentConfig cfg;
};

struct risim_result
{
    risim::SweepResult result;
};

struct risim_channels
{
    risim::ChannelSet channels;
};

namespace
{

thread_local std::string last_error;

int fail(int status, const std::string &message)
{
    last_error = message;
    return status;
}

// Runs fn, translating exceptions into status codes
template <typename Fn>
int guard(Fn &&fn) noexcept
{
    try
    {
        last_error.clear();
        return fn();
    }
    catch (const risim::ConfigError &e)
    {
        return fail(RISIM_ERR_CONFIG, e.what());
    }
    catch (const risim::DomainError &e)
    {
        return fail(RISIM_ERR_DOMAIN, e.what());
    }
    catch (const risim::DimensionError &e)
    {
        return fail(RISIM_ERR_DIMENSION, e.what());
    }
    catch (const risim::IndexError &e)
    {
        return fail(RISIM_ERR_INDEX, e.what());
    }
    catch (const risim::ResourceError &e)
    {
        return fail(RISIM_ERR_RESOURCE, e.what());
    }
    catch (const risim::IoError &e)
    {
        return fail(RISIM_ERR_IO, e.what());
    }
    catch (const std::exception &e)
    {
        return fail(RISIM_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(RISIM_ERR_INTERNAL, "unknown exception");
    }
}

int write_string(const std::string &s, char *buffer, size_t *len)
{
    if (!len)
        return fail(RISIM_ERR_NULL_POINTER, "length pointer is NULL");
    const size_t need = s.size() + 1;
    const size_t capacity = *len;
    *len = need;
    if (!buffer || capacity < need)
        return fail(RISIM_ERR_INSUFFICIENT_BUFFER, "buffer too small; " + std::to_string(need) + " bytes required");
    std::memcpy(buffer, s.c_str(), need);
    return RISIM_OK;
}

#define RISIM_REQUIRE(ptr)                                                                                             \
    if (!(ptr))                                                                                                        \
    return fail(RISIM_ERR_NULL_POINTER, #ptr " is NULL")

risim::Geometry to_geometry(const risim_geometry &g)
{
    return risim::Geometry{g.d_br, g.d_rd, g.d_re, g.d_bd, g.d_be, g.chi};
}

} // namespace

extern "C" {

const char *risim_version(void)
{
    return "1.0.0";
}

const char *risim_status_string(int status)
{
    switch (status)
    {
    case RISIM_OK:
        return "ok";
    case RISIM_ERR_NULL_POINTER:
        return "null pointer";
    case RISIM_ERR_DOMAIN:
        return "domain error";
    case RISIM_ERR_DIMENSION:
        return "dimension mismatch";
    case RISIM_ERR_INDEX:
        return "index out of range";
    case RISIM_ERR_RESOURCE:
        return "resource limit exceeded";
    case RISIM_ERR_CONFIG:
        return "configuration error";
    case RISIM_ERR_IO:
        return "I/O error";
    case RISIM_ERR_INSUFFICIENT_BUFFER:
        return "insufficient buffer";
    case RISIM_ERR_VERIFICATION:
        return "verification failed";
    default:
        return "internal error";
    }
}

const char *risim_last_error(void)
{
    return last_error.c_str();
}

int risim_preset_count(size_t *count)
{
    RISIM_REQUIRE(count);
    *count = risim::geometry_presets().size();
    return RISIM_OK;
}

int risim_preset_get(size_t index, const char **name, const char **description, risim_geometry *geometry)
{
    const auto presets = risim::geometry_presets();
    if (index >= presets.size())
        return fail(RISIM_ERR_INDEX, "preset index out of range");
    const auto &p = presets[index];
    // string_views into static string literals, NUL-terminated
    if (name)
        *name = p.name.data();
    if (description)
        *description = p.description.data();
    if (geometry)
        *geometry = risim_geometry{p.geometry.d_br, p.geometry.d_rd, p.geometry.d_re,
                                   p.geometry.d_bd, p.geometry.d_be, p.geometry.chi};
    return RISIM_OK;
}

int risim_config_parse(const char *text, risim_config **out)
{
    RISIM_REQUIRE(text);
    RISIM_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        *out = new risim_config{risim::parse_config(text)};
        return RISIM_OK;
    });
}

int risim_config_load(const char *path, risim_config **out)
{
    RISIM_REQUIRE(path);
    RISIM_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        *out = new risim_config{risim::load_config(path)};
        return RISIM_OK;
    });
}

int risim_config_serialize(const risim_config *cfg, char *buffer, size_t *len)
{
    RISIM_REQUIRE(cfg);
    return guard([&] { return write_string(risim::serialize_config(cfg->cfg), buffer, len); });
}

int risim_config_set_seed(risim_config *cfg, uint64_t seed)
{
    RISIM_REQUIRE(cfg);
    cfg->cfg.sweep.seed = seed;
    return RISIM_OK;
}

int risim_config_select(risim_config *cfg, const char *const *names, size_t count)
{
    RISIM_REQUIRE(cfg);
    if (count > 0)
        RISIM_REQUIRE(names);
    return guard([&] {
        std::vector<std::string> list;
        for (size_t i = 0; i < count; ++i)
        {
            if (!names[i])
                return fail(RISIM_ERR_NULL_POINTER, "scenario name is NULL");
            list.emplace_back(names[i]);
        }
        risim::select_scenarios(cfg->cfg, list);
        return int(RISIM_OK);
    });
}

int risim_config_scenario_count(const risim_config *cfg, size_t *count)
{
    RISIM_REQUIRE(cfg);
    RISIM_REQUIRE(count);
    *count = cfg->cfg.scenarios.size();
    return RISIM_OK;
}

int risim_config_power_count(const risim_config *cfg, size_t *count)
{
    RISIM_REQUIRE(cfg);
    RISIM_REQUIRE(count);
    *count = cfg->cfg.sweep.pt_dbw.size();
    return RISIM_OK;
}

int risim_config_destroy(risim_config *cfg)
{
    delete cfg;
    return RISIM_OK;
}

int risim_run_sweep(const risim_config *cfg, unsigned workers, risim_result **out)
{
    RISIM_REQUIRE(cfg);
    RISIM_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        auto res = std::make_unique<risim_result>();
        res->result = risim::run_sweep(cfg->cfg.scenarios, cfg->cfg.sweep, workers);
        *out = res.release();
        return RISIM_OK;
    });
}

int risim_result_row_count(const risim_result *res, size_t *count)
{
    RISIM_REQUIRE(res);
    RISIM_REQUIRE(count);
    *count = res->result.rows.size();
    return RISIM_OK;
}

int risim_result_row(const risim_result *res, size_t index, risim_row *row)
{
    RISIM_REQUIRE(res);
    RISIM_REQUIRE(row);
    if (index >= res->result.rows.size())
        return fail(RISIM_ERR_INDEX, "row index out of range");
    const auto &r = res->result.rows[index];
    *row = risim_row{r.scenario.c_str(),
                     r.alpha,
                     r.direct_links == risim::DirectLinks::blocked ? 1 : 0,
                     r.n_elements,
                     r.pt_dbw,
                     r.realizations,
                     r.mean_secrecy,
                     r.stderr_secrecy};
    return RISIM_OK;
}

int risim_result_csv(const risim_result *res, char *buffer, size_t *len)
{
    RISIM_REQUIRE(res);
    return guard([&] { return write_string(risim::format_csv(res->result), buffer, len); });
}

int risim_result_write_csv(const risim_result *res, const char *path)
{
    RISIM_REQUIRE(res);
    RISIM_REQUIRE(path);
    return guard([&] {
        risim::emit_csv(res->result, path);
        return RISIM_OK;
    });
}

int risim_result_destroy(risim_result *res)
{
    delete res;
    return RISIM_OK;
}

int risim_verify(uint64_t seed, risim_line_callback cb, void *user, size_t *passed, size_t *failed)
{
    return guard([&] {
        const risim::VerificationReport report = risim::run_verification(seed);
        for (const auto &c : report.checks)
        {
            if (!cb)
                break;
            const std::string line = std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail;
            cb(line.c_str(), user);
        }
        if (passed)
            *passed = report.passed();
        if (failed)
            *failed = report.failed();
        if (report.failed() > 0)
            return fail(RISIM_ERR_VERIFICATION, std::to_string(report.failed()) + " verification check(s) failed");
        return int(RISIM_OK);
    });
}

int risim_channels_generate(const risim_geometry *geometry, size_t n_elements, uint64_t seed, uint64_t index,
                            risim_channels **out)
{
    RISIM_REQUIRE(geometry);
    RISIM_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        risim::CounterStream stream(seed, index, risim::StreamTag::channels);
        *out = new risim_channels{risim::generate_channel_set(to_geometry(*geometry), n_elements, stream)};
        return RISIM_OK;
    });
}

int risim_channels_block_direct(risim_channels *ch)
{
    RISIM_REQUIRE(ch);
    ch->channels = risim::block_direct_links(ch->channels);
    return RISIM_OK;
}

int risim_channels_element_count(const risim_channels *ch, size_t *count)
{
    RISIM_REQUIRE(ch);
    RISIM_REQUIRE(count);
    *count = ch->channels.n_elements();
    return RISIM_OK;
}

int risim_channels_destroy(risim_channels *ch)
{
    delete ch;
    return RISIM_OK;
}

int risim_optimize(const risim_channels *ch, double pt_dbw, double n_o, double alpha, unsigned sweeps,
                   double *phases, size_t n_phases, double *g)
{
    RISIM_REQUIRE(ch);
    RISIM_REQUIRE(phases);
    return guard([&] {
        if (n_phases != ch->channels.n_elements())
            throw risim::DimensionError("phase buffer length does not match the RIS element count");
        risim::OptimizerConfig opt;
        opt.sweeps = sweeps;
        const auto res = risim::optimize_phases(ch->channels, risim::LinkBudget::from_dbw(pt_dbw, n_o),
                                                risim::ObjectiveConfig(alpha), opt);
        for (size_t i = 0; i < n_phases; ++i)
            phases[i] = res.phases[i];
        if (g)
            *g = res.objective;
        return RISIM_OK;
    });
}

int risim_secrecy_capacity(const risim_channels *ch, double pt_dbw, double n_o, const double *phases,
                           size_t n_phases, double *capacity)
{
    RISIM_REQUIRE(ch);
    RISIM_REQUIRE(capacity);
    if (n_phases > 0)
        RISIM_REQUIRE(phases);
    return guard([&] {
        const risim::PhaseVector pv(std::vector<double>(phases, phases + n_phases));
        const auto snrs = risim::snr_pair(ch->channels, pv, risim::LinkBudget::from_dbw(pt_dbw, n_o));
        *capacity = risim::weighted_secrecy_capacity(snrs, risim::ObjectiveConfig(1.0));
        return RISIM_OK;
    });
}

} // extern "C"
