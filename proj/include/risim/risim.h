/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * risim: simulation library for RIS-assisted physical-layer secrecy
 * Copyright (C) 2026 The risim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RISIM_H
#define RISIM_H

/*
 * C interface to librisim.
 *
 * Every function returns a risim_status. On failure a description is available
 * from risim_last_error() until the next call on the same thread. Objects are
 * opaque handles created by *_create/_parse/_load/_run functions and released
 * with the matching *_destroy; destroy functions accept NULL.
 *
 * Strings are returned through (buffer, length) pairs: on entry *len holds the
 * buffer capacity, on return the size required including the terminating NUL.
 * If the buffer is NULL or too small RISIM_ERR_INSUFFICIENT_BUFFER is returned
 * and *len tells the caller how much to allocate.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(RISIM_BUILDING_LIBRARY)
#define RISIM_API __declspec(dllexport)
#else
#define RISIM_API __declspec(dllimport)
#endif
#else
#define RISIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum risim_status
{
    RISIM_OK = 0,
    RISIM_ERR_NULL_POINTER = -1,
    RISIM_ERR_DOMAIN = -2,          /* argument outside its valid range */
    RISIM_ERR_DIMENSION = -3,       /* inconsistent vector lengths */
    RISIM_ERR_INDEX = -4,           /* index out of range */
    RISIM_ERR_RESOURCE = -5,        /* evaluation cap exceeded */
    RISIM_ERR_CONFIG = -6,          /* configuration parse or validation error */
    RISIM_ERR_IO = -7,              /* file could not be read or written */
    RISIM_ERR_INSUFFICIENT_BUFFER = -8,
    RISIM_ERR_VERIFICATION = -9,    /* one or more verification checks failed */
    RISIM_ERR_INTERNAL = -99
} risim_status;

typedef struct risim_config risim_config;   /* scenarios + sweep settings */
typedef struct risim_result risim_result;   /* sweep table */
typedef struct risim_channels risim_channels; /* one channel realization */

typedef struct risim_geometry
{
    double d_br, d_rd, d_re, d_bd, d_be; /* meters */
    double chi;                          /* path-loss exponent */
} risim_geometry;

typedef struct risim_row
{
    const char *scenario; /* valid while the owning result lives */
    double alpha;
    int direct_links_blocked;
    size_t n_elements;
    double pt_dbw;
    size_t realizations;
    double mean_secrecy_bpcu;
    double stderr_bpcu;
} risim_row;

typedef void (*risim_line_callback)(const char *line, void *user);

RISIM_API const char *risim_version(void);
RISIM_API const char *risim_status_string(int status);
RISIM_API const char *risim_last_error(void);

/* Geometry presets */
RISIM_API int risim_preset_count(size_t *count);
RISIM_API int risim_preset_get(size_t index, const char **name, const char **description, risim_geometry *geometry);

/* Configuration */
RISIM_API int risim_config_parse(const char *text, risim_config **out);
RISIM_API int risim_config_load(const char *path, risim_config **out);
RISIM_API int risim_config_serialize(const risim_config *cfg, char *buffer, size_t *len);
RISIM_API int risim_config_set_seed(risim_config *cfg, uint64_t seed);
RISIM_API int risim_config_select(risim_config *cfg, const char *const *names, size_t count);
RISIM_API int risim_config_scenario_count(const risim_config *cfg, size_t *count);
RISIM_API int risim_config_power_count(const risim_config *cfg, size_t *count);
RISIM_API int risim_config_destroy(risim_config *cfg);

/* Sweeps. workers == 0 uses RISIM_THREADS, then the hardware concurrency. */
RISIM_API int risim_run_sweep(const risim_config *cfg, unsigned workers, risim_result **out);
RISIM_API int risim_result_row_count(const risim_result *res, size_t *count);
RISIM_API int risim_result_row(const risim_result *res, size_t index, risim_row *row);
RISIM_API int risim_result_csv(const risim_result *res, char *buffer, size_t *len);
RISIM_API int risim_result_write_csv(const risim_result *res, const char *path);
RISIM_API int risim_result_destroy(risim_result *res);

/* Oracle cross-checks. Calls `cb` once per check with a summary line.
   Returns RISIM_ERR_VERIFICATION if any check failed. */
RISIM_API int risim_verify(uint64_t seed, risim_line_callback cb, void *user, size_t *passed, size_t *failed);

/* Single realizations */
RISIM_API int risim_channels_generate(const risim_geometry *geometry, size_t n_elements, uint64_t seed,
                                      uint64_t index, risim_channels **out);
RISIM_API int risim_channels_block_direct(risim_channels *ch);
RISIM_API int risim_channels_element_count(const risim_channels *ch, size_t *count);
RISIM_API int risim_channels_destroy(risim_channels *ch);

/* Optimizes the RIS phases of `ch` for the weighted objective with the given
   alpha. `phases` receives n_elements values; `g` (may be NULL) the objective. */
RISIM_API int risim_optimize(const risim_channels *ch, double pt_dbw, double n_o, double alpha, unsigned sweeps,
                             double *phases, size_t n_phases, double *g);

/* Reported secrecy capacity (alpha = 1, clamped at 0) for the given phases */
RISIM_API int risim_secrecy_capacity(const risim_channels *ch, double pt_dbw, double n_o, const double *phases,
                                     size_t n_phases, double *capacity);

#ifdef __cplusplus
}
#endif

#endif
