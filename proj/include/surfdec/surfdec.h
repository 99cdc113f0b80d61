/*
 * Copyright 2026 The surfdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the surfdec library: rotated surface code bit-flip
 * decoders, the exhaustive decoder comparison harness, run-time projection
 * and threshold estimation.
 *
 * Every fallible call returns an sd_status. On failure, sd_last_error()
 * describes the problem; the message is per thread and stays valid until
 * the next failing call on that thread. Strings returned through a char**
 * are owned by the caller and released with sd_string_free(). Handles are
 * released with their *_free function; passing NULL to a free function is
 * a no-op. Bit vectors cross the boundary as one byte (0 or 1) per bit.
 *
 * Handles may be shared between threads for reading. A decoder handle keeps
 * scratch state and must be used by one thread at a time.
 */

#ifndef SURFDEC_SURFDEC_H
#define SURFDEC_SURFDEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SURFDEC_BUILDING_LIBRARY)
#define SURFDEC_API __declspec(dllexport)
#else
#define SURFDEC_API __declspec(dllimport)
#endif
#else
#define SURFDEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sd_status {
    SD_OK = 0,
    SD_ERR_INVALID_ARGUMENT = 1,
    SD_ERR_IO = 2,
    SD_ERR_FORMAT = 3,
    SD_ERR_TRUNCATED = 4,
    SD_ERR_VERSION = 5,
    SD_ERR_UNSUPPORTED = 6,
    SD_ERR_INTERNAL = 7
} sd_status;

typedef enum sd_decoder_kind { SD_DECODER_MWPM = 0, SD_DECODER_BPOSD = 1, SD_DECODER_LUT = 2 } sd_decoder_kind;

typedef enum sd_residual_class {
    SD_RESIDUAL_SUCCESS = 0,
    SD_RESIDUAL_LOGICAL_FAILURE = 1,
    SD_RESIDUAL_SYNDROME_NONZERO = 2
} sd_residual_class;

typedef enum sd_run_mode { SD_MODE_EXHAUSTIVE = 0, SD_MODE_SAMPLED = 1, SD_MODE_STRATIFIED = 2 } sd_run_mode;

typedef struct sd_code sd_code;
typedef struct sd_decoder sd_decoder;
typedef struct sd_lut sd_lut;
typedef struct sd_stats sd_stats;

SURFDEC_API const char *sd_version(void);
SURFDEC_API const char *sd_last_error(void);
SURFDEC_API const char *sd_status_name(sd_status status);
SURFDEC_API void sd_string_free(char *text);

/* Parses "mwpm", "bposd" or "lut". */
SURFDEC_API sd_status sd_decoder_kind_from_name(const char *name, sd_decoder_kind *out);
SURFDEC_API const char *sd_decoder_kind_name(sd_decoder_kind kind);

/* ---- code ---- */

/* Odd distance >= 3. */
SURFDEC_API sd_status sd_code_create(int distance, sd_code **out);
SURFDEC_API void sd_code_free(sd_code *code);
SURFDEC_API int sd_code_distance(const sd_code *code);
SURFDEC_API size_t sd_code_num_data(const sd_code *code);
SURFDEC_API size_t sd_code_num_checks(const sd_code *code);
/* Checks, logical supports and lattice coordinates as JSON. */
SURFDEC_API sd_status sd_code_to_json(const sd_code *code, char **out);
SURFDEC_API sd_status sd_code_syndrome(
    const sd_code *code, const uint8_t *error, size_t num_data, uint8_t *syndrome, size_t num_checks);
SURFDEC_API sd_status sd_code_classify(
    const sd_code *code, const uint8_t *residual, size_t num_data, sd_residual_class *out);

/* ---- decoders ---- */

typedef struct sd_decoder_config {
    /* Channel prior for BPOSD; unused by the other decoders. */
    double error_probability;
    int bp_max_iterations;
} sd_decoder_config;

SURFDEC_API sd_decoder_config sd_decoder_config_default(void);

/* config may be NULL for the defaults. SD_DECODER_LUT builds a table. */
SURFDEC_API sd_status sd_decoder_create(
    const sd_code *code, sd_decoder_kind kind, const sd_decoder_config *config, sd_decoder **out);
SURFDEC_API sd_status sd_decoder_create_from_lut(const sd_lut *lut, sd_decoder **out);
SURFDEC_API void sd_decoder_free(sd_decoder *decoder);
/* converged may be NULL. */
SURFDEC_API sd_status sd_decoder_decode(
    sd_decoder *decoder,
    const uint8_t *syndrome,
    size_t num_checks,
    uint8_t *correction,
    size_t num_data,
    int *converged);

/* ---- lookup tables ---- */

SURFDEC_API sd_status sd_lut_build(const sd_code *code, sd_lut **out);
SURFDEC_API sd_status sd_lut_load(const char *path, sd_lut **out);
SURFDEC_API sd_status sd_lut_save(const sd_lut *lut, const char *path);
SURFDEC_API void sd_lut_free(sd_lut *lut);
SURFDEC_API int sd_lut_distance(const sd_lut *lut);
SURFDEC_API uint64_t sd_lut_num_entries(const sd_lut *lut);
/* The correction for a syndrome, both as little-endian integers. */
SURFDEC_API sd_status sd_lut_entry(const sd_lut *lut, uint64_t syndrome, uint64_t *out);

/* ---- comparison harness ---- */

typedef struct sd_compare_options {
    /* 0 selects the number of hardware threads. */
    unsigned workers;
    size_t example_cap;
    int syndrome_cache;
    double error_probability;
    int bp_max_iterations;
} sd_compare_options;

SURFDEC_API sd_compare_options sd_compare_options_default(void);

/* options may be NULL for the defaults in all three calls. */
SURFDEC_API sd_status sd_compare_exhaustive(
    const sd_code *code, const sd_compare_options *options, uint64_t lo, uint64_t hi, sd_stats **out);
SURFDEC_API sd_status sd_compare_sampled(
    const sd_code *code, const sd_compare_options *options, uint64_t num_samples, uint64_t seed, sd_stats **out);
SURFDEC_API sd_status sd_compare_stratified(
    const sd_code *code,
    const sd_compare_options *options,
    const int *weights,
    size_t num_weights,
    uint64_t per_weight,
    uint64_t seed,
    sd_stats **out);

typedef struct sd_weight_counts {
    uint64_t total;
    uint64_t mwpm_only_fail;
    uint64_t bposd_only_fail;
    uint64_t both_fail;
} sd_weight_counts;

typedef struct sd_venn {
    uint64_t mwpm_only;
    uint64_t bposd_only;
    uint64_t both;
} sd_venn;

SURFDEC_API void sd_stats_free(sd_stats *stats);
SURFDEC_API sd_status sd_stats_clone(const sd_stats *stats, sd_stats **out);
/* Adds src into dst. Fails on distance or mode mismatch. */
SURFDEC_API sd_status sd_stats_merge(sd_stats *dst, const sd_stats *src);
SURFDEC_API int sd_stats_distance(const sd_stats *stats);
SURFDEC_API sd_run_mode sd_stats_mode(const sd_stats *stats);
SURFDEC_API uint64_t sd_stats_total(const sd_stats *stats);
/* d^2 + 1 rows, one per weight. */
SURFDEC_API size_t sd_stats_num_weights(const sd_stats *stats);
SURFDEC_API sd_status sd_stats_weight(const sd_stats *stats, size_t weight, sd_weight_counts *out);
SURFDEC_API sd_status sd_stats_venn(const sd_stats *stats, sd_venn *out);
/* 1 when the per-weight counters are identical, else 0. */
SURFDEC_API int sd_stats_counters_equal(const sd_stats *a, const sd_stats *b);
SURFDEC_API int sd_stats_is_complete_exhaustive(const sd_stats *stats);
/*
 * Exclusive-failure ratio per weight for the MWPM (which = 0) or BPOSD
 * (which = 1) column into out[0 .. num_weights). exact != 0 divides by
 * C(d^2, w) and fails with SD_ERR_UNSUPPORTED unless the stats are a
 * complete exhaustive run; exact == 0 divides by the errors processed.
 */
SURFDEC_API sd_status sd_stats_failure_ratio(
    const sd_stats *stats, int which, int exact, double *out, size_t num_weights);
/* Number of stored example errors in a category (0 mwpm only, 1 bposd only,
 * 2 both) and access to them, smallest first. */
SURFDEC_API size_t sd_stats_num_examples(const sd_stats *stats, int category);
SURFDEC_API sd_status sd_stats_example(const sd_stats *stats, int category, size_t index, uint64_t *out);

SURFDEC_API sd_status sd_stats_to_csv(const sd_stats *stats, char **out);
SURFDEC_API sd_status sd_stats_from_csv(const char *text, sd_stats **out);
SURFDEC_API sd_status sd_stats_save_csv(const sd_stats *stats, const char *path);
SURFDEC_API sd_status sd_stats_load_csv(const char *path, sd_stats **out);
SURFDEC_API sd_status sd_stats_to_json(const sd_stats *stats, char **out);

/* ---- reports ---- */

SURFDEC_API sd_status sd_report_venn_json(const sd_stats *stats, char **out);
SURFDEC_API sd_status sd_report_venn_svg(const sd_stats *stats, char **out);
SURFDEC_API sd_status sd_report_histogram_svg(const sd_stats *stats, char **out);
SURFDEC_API sd_status sd_report_ratio_svg(const sd_stats *stats, char **out);

/* ---- run-time projection ---- */

#define SD_LUMI_CORES 362496u

typedef struct sd_pass_times {
    /* Seconds per 10^6 errors. */
    double generate;
    double mwpm;
    double bposd;
} sd_pass_times;

typedef struct sd_timing_profile {
    int distance;
    uint64_t sample_count;
    uint64_t seed;
    sd_pass_times per_million;
    uint64_t low_count;
    sd_pass_times low_per_million;
    uint64_t high_count;
    sd_pass_times high_per_million;
    uint64_t mwpm_failures;
    uint64_t bposd_failures;
    int pinned;
} sd_timing_profile;

/* Single-threaded timing of generation and both decoders over num_samples
 * uniform errors plus low_weight_samples errors of weight below d/2.
 * options may be NULL; only its decoder fields are used. */
SURFDEC_API sd_status sd_measure_rates(
    const sd_code *code,
    const sd_compare_options *options,
    uint64_t num_samples,
    uint64_t low_weight_samples,
    uint64_t seed,
    sd_timing_profile *out);

SURFDEC_API sd_status sd_error_space_size(int distance, double *out);
SURFDEC_API sd_status sd_extrapolate_single_core(double t_per_million, int distance, double *out);
SURFDEC_API sd_status sd_extrapolate_multicore(double single_core_seconds, uint64_t cores, double *out);
SURFDEC_API sd_status sd_per_million_from_multicore(
    double multicore_seconds, uint64_t cores, int distance, double *out);

typedef enum sd_projection_format {
    SD_PROJECTION_TABLE = 0,
    SD_PROJECTION_CSV = 1,
    SD_PROJECTION_JSON = 2
} sd_projection_format;

/* One row per (distance, decoder). JSON output also lists the measured
 * profiles, which may be NULL when num_profiles is 0. */
SURFDEC_API sd_status sd_projection_report(
    const int *distances,
    size_t num_distances,
    double t_mwpm,
    double t_bposd,
    double probability,
    uint64_t cores,
    const sd_timing_profile *profiles,
    size_t num_profiles,
    sd_projection_format format,
    char **out);
SURFDEC_API sd_status sd_core_scaling_svg(
    int distance, double t_mwpm, double t_bposd, uint64_t marker_cores, char **out);

/* ---- threshold ---- */

typedef struct sd_threshold_point {
    int distance;
    double p;
    uint64_t shots;
    uint64_t failures;
    double rate;
    double lo;
    double hi;
} sd_threshold_point;

typedef struct sd_threshold_options {
    unsigned workers;
    int syndrome_cache;
    int bp_max_iterations;
} sd_threshold_options;

SURFDEC_API sd_threshold_options sd_threshold_options_default(void);

/* options may be NULL. */
SURFDEC_API sd_status sd_logical_error_rate(
    const sd_code *code,
    sd_decoder_kind kind,
    double p,
    uint64_t shots,
    uint64_t seed,
    const sd_threshold_options *options,
    sd_threshold_point *out);

typedef struct sd_crossing_pair {
    int lower_distance;
    int upper_distance;
    int found;
    double p;
} sd_crossing_pair;

typedef struct sd_crossing {
    /* 0 when some pair of consecutive distances does not cross in range. */
    int found;
    double estimate;
    double spread;
    size_t num_pairs;
} sd_crossing;

/* pairs may be NULL; otherwise up to pairs_capacity pairs are written. */
SURFDEC_API sd_status sd_find_crossing(
    const sd_threshold_point *points,
    size_t num_points,
    sd_crossing *out,
    sd_crossing_pair *pairs,
    size_t pairs_capacity);

SURFDEC_API sd_status sd_threshold_to_csv(
    const sd_threshold_point *points,
    size_t num_points,
    const char *decoder,
    uint64_t seed,
    unsigned workers,
    char **out);
/* *points is released with sd_threshold_points_free. */
SURFDEC_API sd_status sd_threshold_from_csv(const char *text, sd_threshold_point **points, size_t *num_points);
SURFDEC_API void sd_threshold_points_free(sd_threshold_point *points);
SURFDEC_API sd_status sd_threshold_svg(
    const sd_threshold_point *points, size_t num_points, const char *decoder, char **out);

/* ---- digests ---- */

/* Lowercase hex SHA-256 into hex[65], NUL terminated. */
SURFDEC_API sd_status sd_sha256_file(const char *path, char hex[65]);
SURFDEC_API sd_status sd_sha256_bytes(const void *data, size_t size, char hex[65]);

#ifdef __cplusplus
}
#endif

#endif
