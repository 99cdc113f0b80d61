// Copyright 2026 The surfdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "surfdec/surfdec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <set>
#include <string>

#include "surfdec/errors.h"
#include "surfdec/feasibility.h"
#include "surfdec/file_io.h"
#include "surfdec/harness.h"
#include "surfdec/lut.h"
#include "surfdec/report.h"
#include "surfdec/stats_io.h"
#include "surfdec/threshold.h"

struct sd_code {
    std::shared_ptr<const surfdec::SurfaceCode> code;
};

struct sd_decoder {
    std::unique_ptr<surfdec::Decoder> decoder;
};

struct sd_lut {
    std::shared_ptr<const surfdec::LookupTable> table;
};

struct sd_stats {
    surfdec::ComparisonStats stats;
};

namespace {

using namespace surfdec;

thread_local std::string last_error;

class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

void require(const void *ptr, const char *name) {
    if (ptr == nullptr) {
        throw ArgumentError(std::string(name) + " must not be NULL");
    }
}

sd_status file_status(FileErrorKind kind) {
    switch (kind) {
        case FileErrorKind::Io:
            return SD_ERR_IO;
        case FileErrorKind::Format:
            return SD_ERR_FORMAT;
        case FileErrorKind::Truncated:
            return SD_ERR_TRUNCATED;
        case FileErrorKind::Version:
            return SD_ERR_VERSION;
    }
    return SD_ERR_INTERNAL;
}

template <typename Fn>
sd_status guard(Fn &&fn) {
    try {
        fn();
        return SD_OK;
    } catch (const FileError &e) {
        last_error = e.what();
        return file_status(e.kind());
    } catch (const UnsupportedError &e) {
        last_error = e.what();
        return SD_ERR_UNSUPPORTED;
    } catch (const std::invalid_argument &e) {
        last_error = e.what();
        return SD_ERR_INVALID_ARGUMENT;
    } catch (const std::out_of_range &e) {
        last_error = e.what();
        return SD_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return SD_ERR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return SD_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return SD_ERR_INTERNAL;
    }
}

char *copy_string(const std::string &text) {
    auto *out = static_cast<char *>(std::malloc(text.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, text.data(), text.size());
    out[text.size()] = '\0';
    return out;
}

void emit(char **out, const std::string &text) {
    require(out, "out");
    *out = copy_string(text);
}

BitString bits_from_bytes(const std::uint8_t *bytes, std::size_t count, std::size_t expected, const char *name) {
    require(bytes, name);
    if (count != expected) {
        throw ArgumentError(
            std::string(name) + " has " + std::to_string(count) + " bits, expected " + std::to_string(expected));
    }
    BitString bits(count);
    for (std::size_t i = 0; i < count; i++) {
        if (bytes[i] > 1) {
            throw ArgumentError(std::string(name) + " bytes must be 0 or 1");
        }
        bits.set(i, bytes[i] != 0);
    }
    return bits;
}

DecoderConfig decoder_config(const sd_compare_options *options) {
    DecoderConfig config;
    if (options != nullptr) {
        config.error_probability = options->error_probability;
        config.bp_max_iterations = options->bp_max_iterations;
    }
    config.validate();
    return config;
}

HarnessOptions harness_options(const sd_compare_options *options) {
    HarnessOptions h;
    if (options != nullptr) {
        h.workers = options->workers;
        h.example_cap = options->example_cap;
        h.syndrome_cache = options->syndrome_cache != 0;
    }
    return h;
}

DecoderKind to_kind(sd_decoder_kind kind) {
    switch (kind) {
        case SD_DECODER_MWPM:
            return DecoderKind::Mwpm;
        case SD_DECODER_BPOSD:
            return DecoderKind::Bposd;
        case SD_DECODER_LUT:
            return DecoderKind::Lut;
    }
    throw ArgumentError("unknown decoder kind");
}

void set_stats(sd_stats **out, ComparisonStats stats) {
    require(out, "out");
    *out = new sd_stats{std::move(stats)};
}

sd_pass_times to_c(const PassTimes &t) {
    return {t.generate, t.mwpm, t.bposd};
}

PassTimes from_c(const sd_pass_times &t) {
    return {t.generate, t.mwpm, t.bposd};
}

std::vector<ThresholdPoint> points_from_c(const sd_threshold_point *points, std::size_t n) {
    if (n > 0) {
        require(points, "points");
    }
    std::vector<ThresholdPoint> out(n);
    for (std::size_t i = 0; i < n; i++) {
        const auto &p = points[i];
        out[i] = {p.distance, p.p, p.shots, p.failures, p.rate, p.lo, p.hi};
    }
    return out;
}

}  // namespace

extern "C" {

const char *sd_version(void) {
    return "1.0.0";
}

const char *sd_last_error(void) {
    return last_error.c_str();
}

const char *sd_status_name(sd_status status) {
    switch (status) {
        case SD_OK:
            return "ok";
        case SD_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case SD_ERR_IO:
            return "i/o error";
        case SD_ERR_FORMAT:
            return "format error";
        case SD_ERR_TRUNCATED:
            return "truncated input";
        case SD_ERR_VERSION:
            return "unsupported version";
        case SD_ERR_UNSUPPORTED:
            return "unsupported operation";
        case SD_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void sd_string_free(char *text) {
    std::free(text);
}

sd_status sd_decoder_kind_from_name(const char *name, sd_decoder_kind *out) {
    return guard([&] {
        require(name, "name");
        require(out, "out");
        switch (parse_decoder_kind(name)) {
            case DecoderKind::Mwpm:
                *out = SD_DECODER_MWPM;
                break;
            case DecoderKind::Bposd:
                *out = SD_DECODER_BPOSD;
                break;
            case DecoderKind::Lut:
                *out = SD_DECODER_LUT;
                break;
        }
    });
}

const char *sd_decoder_kind_name(sd_decoder_kind kind) {
    switch (kind) {
        case SD_DECODER_MWPM:
            return "mwpm";
        case SD_DECODER_BPOSD:
            return "bposd";
        case SD_DECODER_LUT:
            return "lut";
    }
    return "unknown";
}

sd_status sd_code_create(int distance, sd_code **out) {
    return guard([&] {
        require(out, "out");
        *out = new sd_code{std::make_shared<const SurfaceCode>(distance)};
    });
}

void sd_code_free(sd_code *code) {
    delete code;
}

int sd_code_distance(const sd_code *code) {
    return code ? code->code->distance() : 0;
}

size_t sd_code_num_data(const sd_code *code) {
    return code ? code->code->num_data() : 0;
}

size_t sd_code_num_checks(const sd_code *code) {
    return code ? code->code->num_checks() : 0;
}

sd_status sd_code_to_json(const sd_code *code, char **out) {
    return guard([&] {
        require(code, "code");
        emit(out, code->code->to_json());
    });
}

sd_status sd_code_syndrome(
    const sd_code *code, const uint8_t *error, size_t num_data, uint8_t *syndrome, size_t num_checks) {
    return guard([&] {
        require(code, "code");
        require(syndrome, "syndrome");
        auto e = bits_from_bytes(error, num_data, code->code->num_data(), "error");
        if (num_checks != code->code->num_checks()) {
            throw ArgumentError("syndrome buffer has the wrong length");
        }
        auto s = code->code->syndrome_of(e);
        for (std::size_t i = 0; i < num_checks; i++) {
            syndrome[i] = s.get(i) ? 1 : 0;
        }
    });
}

sd_status sd_code_classify(const sd_code *code, const uint8_t *residual, size_t num_data, sd_residual_class *out) {
    return guard([&] {
        require(code, "code");
        require(out, "out");
        auto r = bits_from_bytes(residual, num_data, code->code->num_data(), "residual");
        switch (code->code->classify_residual(r)) {
            case ResidualClass::Success:
                *out = SD_RESIDUAL_SUCCESS;
                break;
            case ResidualClass::LogicalFailure:
                *out = SD_RESIDUAL_LOGICAL_FAILURE;
                break;
            case ResidualClass::SyndromeNonzero:
                *out = SD_RESIDUAL_SYNDROME_NONZERO;
                break;
        }
    });
}

sd_decoder_config sd_decoder_config_default(void) {
    DecoderConfig d;
    return {d.error_probability, d.bp_max_iterations};
}

sd_status sd_decoder_create(
    const sd_code *code, sd_decoder_kind kind, const sd_decoder_config *config, sd_decoder **out) {
    return guard([&] {
        require(code, "code");
        require(out, "out");
        DecoderConfig c;
        if (config != nullptr) {
            c.error_probability = config->error_probability;
            c.bp_max_iterations = config->bp_max_iterations;
        }
        *out = new sd_decoder{make_decoder(to_kind(kind), code->code, c)};
    });
}

sd_status sd_decoder_create_from_lut(const sd_lut *lut, sd_decoder **out) {
    return guard([&] {
        require(lut, "lut");
        require(out, "out");
        *out = new sd_decoder{make_lut_decoder(lut->table)};
    });
}

void sd_decoder_free(sd_decoder *decoder) {
    delete decoder;
}

sd_status sd_decoder_decode(
    sd_decoder *decoder,
    const uint8_t *syndrome,
    size_t num_checks,
    uint8_t *correction,
    size_t num_data,
    int *converged) {
    return guard([&] {
        require(decoder, "decoder");
        require(correction, "correction");
        const auto &code = decoder->decoder->code();
        auto s = bits_from_bytes(syndrome, num_checks, code.num_checks(), "syndrome");
        if (num_data != code.num_data()) {
            throw ArgumentError("correction buffer has the wrong length");
        }
        auto result = decoder->decoder->decode(s);
        for (std::size_t i = 0; i < num_data; i++) {
            correction[i] = result.correction.get(i) ? 1 : 0;
        }
        if (converged != nullptr) {
            *converged = result.converged ? 1 : 0;
        }
    });
}

sd_status sd_lut_build(const sd_code *code, sd_lut **out) {
    return guard([&] {
        require(code, "code");
        require(out, "out");
        *out = new sd_lut{std::make_shared<const LookupTable>(LookupTable::build(*code->code))};
    });
}

sd_status sd_lut_load(const char *path, sd_lut **out) {
    return guard([&] {
        require(path, "path");
        require(out, "out");
        *out = new sd_lut{std::make_shared<const LookupTable>(LookupTable::load(path))};
    });
}

sd_status sd_lut_save(const sd_lut *lut, const char *path) {
    return guard([&] {
        require(lut, "lut");
        require(path, "path");
        lut->table->save(path);
    });
}

void sd_lut_free(sd_lut *lut) {
    delete lut;
}

int sd_lut_distance(const sd_lut *lut) {
    return lut ? lut->table->distance() : 0;
}

uint64_t sd_lut_num_entries(const sd_lut *lut) {
    return lut ? lut->table->num_entries() : 0;
}

sd_status sd_lut_entry(const sd_lut *lut, uint64_t syndrome, uint64_t *out) {
    return guard([&] {
        require(lut, "lut");
        require(out, "out");
        if (syndrome >= lut->table->num_entries()) {
            throw ArgumentError("syndrome out of range");
        }
        *out = lut->table->entry(syndrome);
    });
}

sd_compare_options sd_compare_options_default(void) {
    HarnessOptions h;
    DecoderConfig d;
    return {h.workers, h.example_cap, h.syndrome_cache ? 1 : 0, d.error_probability, d.bp_max_iterations};
}

sd_status sd_compare_exhaustive(
    const sd_code *code, const sd_compare_options *options, uint64_t lo, uint64_t hi, sd_stats **out) {
    return guard([&] {
        require(code, "code");
        auto pair = default_decoders(code->code, decoder_config(options));
        set_stats(out, run_exhaustive(code->code, pair, lo, hi, harness_options(options)));
    });
}

sd_status sd_compare_sampled(
    const sd_code *code, const sd_compare_options *options, uint64_t num_samples, uint64_t seed, sd_stats **out) {
    return guard([&] {
        require(code, "code");
        auto pair = default_decoders(code->code, decoder_config(options));
        set_stats(out, run_sampled(code->code, pair, num_samples, seed, harness_options(options)));
    });
}

sd_status sd_compare_stratified(
    const sd_code *code,
    const sd_compare_options *options,
    const int *weights,
    size_t num_weights,
    uint64_t per_weight,
    uint64_t seed,
    sd_stats **out) {
    return guard([&] {
        require(code, "code");
        require(weights, "weights");
        auto pair = default_decoders(code->code, decoder_config(options));
        std::vector<int> w(weights, weights + num_weights);
        set_stats(out, run_stratified(code->code, pair, w, per_weight, seed, harness_options(options)));
    });
}

void sd_stats_free(sd_stats *stats) {
    delete stats;
}

sd_status sd_stats_clone(const sd_stats *stats, sd_stats **out) {
    return guard([&] {
        require(stats, "stats");
        set_stats(out, stats->stats);
    });
}

sd_status sd_stats_merge(sd_stats *dst, const sd_stats *src) {
    return guard([&] {
        require(dst, "dst");
        require(src, "src");
        dst->stats.merge(src->stats);
    });
}

int sd_stats_distance(const sd_stats *stats) {
    return stats ? stats->stats.distance : 0;
}

sd_run_mode sd_stats_mode(const sd_stats *stats) {
    if (stats == nullptr) {
        return SD_MODE_EXHAUSTIVE;
    }
    switch (stats->stats.mode) {
        case RunMode::Exhaustive:
            return SD_MODE_EXHAUSTIVE;
        case RunMode::Sampled:
            return SD_MODE_SAMPLED;
        case RunMode::Stratified:
            return SD_MODE_STRATIFIED;
    }
    return SD_MODE_EXHAUSTIVE;
}

uint64_t sd_stats_total(const sd_stats *stats) {
    return stats ? stats->stats.total_errors() : 0;
}

size_t sd_stats_num_weights(const sd_stats *stats) {
    return stats ? stats->stats.per_weight.size() : 0;
}

sd_status sd_stats_weight(const sd_stats *stats, size_t weight, sd_weight_counts *out) {
    return guard([&] {
        require(stats, "stats");
        require(out, "out");
        const auto &row = stats->stats.per_weight.at(weight);
        *out = {row.total, row.mwpm_only_fail, row.bposd_only_fail, row.both_fail};
    });
}

sd_status sd_stats_venn(const sd_stats *stats, sd_venn *out) {
    return guard([&] {
        require(stats, "stats");
        require(out, "out");
        auto v = venn_counts(stats->stats);
        *out = {v.mwpm_only, v.bposd_only, v.both};
    });
}

int sd_stats_counters_equal(const sd_stats *a, const sd_stats *b) {
    return a && b && a->stats.counters_equal(b->stats) ? 1 : 0;
}

int sd_stats_is_complete_exhaustive(const sd_stats *stats) {
    return stats && is_complete_exhaustive(stats->stats) ? 1 : 0;
}

sd_status sd_stats_failure_ratio(const sd_stats *stats, int which, int exact, double *out, size_t num_weights) {
    return guard([&] {
        require(stats, "stats");
        require(out, "out");
        if (which != 0 && which != 1) {
            throw ArgumentError("which must be 0 (MWPM) or 1 (BPOSD)");
        }
        if (num_weights != stats->stats.per_weight.size()) {
            throw ArgumentError("ratio buffer has the wrong length");
        }
        auto selector = which == 0 ? DecoderSelector::Mwpm : DecoderSelector::Bposd;
        auto ratios = exact ? failure_ratio(stats->stats, selector) : estimated_failure_ratio(stats->stats, selector);
        std::copy(ratios.begin(), ratios.end(), out);
    });
}

size_t sd_stats_num_examples(const sd_stats *stats, int category) {
    if (stats == nullptr || category < 0 || category > 2) {
        return 0;
    }
    return stats->stats.examples[category].size();
}

sd_status sd_stats_example(const sd_stats *stats, int category, size_t index, uint64_t *out) {
    return guard([&] {
        require(stats, "stats");
        require(out, "out");
        if (category < 0 || category > 2) {
            throw ArgumentError("category must be 0, 1 or 2");
        }
        *out = stats->stats.examples[category].at(index);
    });
}

sd_status sd_stats_to_csv(const sd_stats *stats, char **out) {
    return guard([&] {
        require(stats, "stats");
        emit(out, stats_to_csv(stats->stats));
    });
}

sd_status sd_stats_from_csv(const char *text, sd_stats **out) {
    return guard([&] {
        require(text, "text");
        set_stats(out, stats_from_csv(text));
    });
}

sd_status sd_stats_save_csv(const sd_stats *stats, const char *path) {
    return guard([&] {
        require(stats, "stats");
        require(path, "path");
        save_stats_csv(stats->stats, path);
    });
}

sd_status sd_stats_load_csv(const char *path, sd_stats **out) {
    return guard([&] {
        require(path, "path");
        set_stats(out, load_stats_csv(path));
    });
}

sd_status sd_stats_to_json(const sd_stats *stats, char **out) {
    return guard([&] {
        require(stats, "stats");
        emit(out, stats_to_json(stats->stats));
    });
}

sd_status sd_report_venn_json(const sd_stats *stats, char **out) {
    return guard([&] {
        require(stats, "stats");
        emit(out, venn_json(stats->stats));
    });
}

sd_status sd_report_venn_svg(const sd_stats *stats, char **out) {
    return guard([&] {
        require(stats, "stats");
        emit(out, venn_svg(stats->stats));
    });
}

sd_status sd_report_histogram_svg(const sd_stats *stats, char **out) {
    return guard([&] {
        require(stats, "stats");
        emit(out, exclusive_histogram_svg(stats->stats));
    });
}

sd_status sd_report_ratio_svg(const sd_stats *stats, char **out) {
    return guard([&] {
        require(stats, "stats");
        emit(out, failure_ratio_svg(stats->stats));
    });
}

sd_status sd_measure_rates(
    const sd_code *code,
    const sd_compare_options *options,
    uint64_t num_samples,
    uint64_t low_weight_samples,
    uint64_t seed,
    sd_timing_profile *out) {
    return guard([&] {
        require(code, "code");
        require(out, "out");
        MeasureOptions m;
        m.low_weight_samples = low_weight_samples;
        auto pair = default_decoders(code->code, decoder_config(options));
        auto p = measure_rates(code->code, pair, num_samples, seed, m);
        *out = {p.distance,
                p.sample_count,
                p.seed,
                to_c(p.per_million),
                p.low.count,
                to_c(p.low.per_million),
                p.high.count,
                to_c(p.high.per_million),
                p.mwpm_failures,
                p.bposd_failures,
                p.pinned ? 1 : 0};
    });
}

sd_status sd_error_space_size(int distance, double *out) {
    return guard([&] {
        require(out, "out");
        *out = error_space_size(distance);
    });
}

sd_status sd_extrapolate_single_core(double t_per_million, int distance, double *out) {
    return guard([&] {
        require(out, "out");
        *out = extrapolate_single_core(t_per_million, distance);
    });
}

sd_status sd_extrapolate_multicore(double single_core_seconds, uint64_t cores, double *out) {
    return guard([&] {
        require(out, "out");
        *out = extrapolate_multicore(single_core_seconds, cores);
    });
}

sd_status sd_per_million_from_multicore(double multicore_seconds, uint64_t cores, int distance, double *out) {
    return guard([&] {
        require(out, "out");
        *out = per_million_from_multicore(multicore_seconds, cores, distance);
    });
}

sd_status sd_projection_report(
    const int *distances,
    size_t num_distances,
    double t_mwpm,
    double t_bposd,
    double probability,
    uint64_t cores,
    const sd_timing_profile *profiles,
    size_t num_profiles,
    sd_projection_format format,
    char **out) {
    return guard([&] {
        require(distances, "distances");
        if (num_profiles > 0) {
            require(profiles, "profiles");
        }
        auto rows = project(std::vector<int>(distances, distances + num_distances), t_mwpm, t_bposd, probability, cores);
        switch (format) {
            case SD_PROJECTION_TABLE:
                emit(out, projection_table(rows));
                return;
            case SD_PROJECTION_CSV:
                emit(out, projection_csv(rows));
                return;
            case SD_PROJECTION_JSON: {
                std::vector<TimingProfile> measured;
                for (std::size_t i = 0; i < num_profiles; i++) {
                    const auto &c = profiles[i];
                    TimingProfile p;
                    p.distance = c.distance;
                    p.sample_count = c.sample_count;
                    p.seed = c.seed;
                    p.per_million = from_c(c.per_million);
                    p.low = {c.low_count, from_c(c.low_per_million)};
                    p.high = {c.high_count, from_c(c.high_per_million)};
                    p.mwpm_failures = c.mwpm_failures;
                    p.bposd_failures = c.bposd_failures;
                    p.pinned = c.pinned != 0;
                    measured.push_back(p);
                }
                emit(out, timing_json(measured, rows));
                return;
            }
        }
        throw ArgumentError("unknown projection format");
    });
}

sd_status sd_core_scaling_svg(int distance, double t_mwpm, double t_bposd, uint64_t marker_cores, char **out) {
    return guard([&] { emit(out, core_scaling_svg(distance, t_mwpm, t_bposd, marker_cores)); });
}

sd_threshold_options sd_threshold_options_default(void) {
    ThresholdOptions t;
    return {t.workers, t.syndrome_cache ? 1 : 0, t.bp_max_iterations};
}

sd_status sd_logical_error_rate(
    const sd_code *code,
    sd_decoder_kind kind,
    double p,
    uint64_t shots,
    uint64_t seed,
    const sd_threshold_options *options,
    sd_threshold_point *out) {
    return guard([&] {
        require(code, "code");
        require(out, "out");
        ThresholdOptions t;
        if (options != nullptr) {
            t.workers = options->workers;
            t.syndrome_cache = options->syndrome_cache != 0;
            t.bp_max_iterations = options->bp_max_iterations;
        }
        auto pt = logical_error_rate(code->code, to_kind(kind), p, shots, seed, t);
        *out = {pt.distance, pt.p, pt.shots, pt.failures, pt.rate, pt.lo, pt.hi};
    });
}

sd_status sd_find_crossing(
    const sd_threshold_point *points,
    size_t num_points,
    sd_crossing *out,
    sd_crossing_pair *pairs,
    size_t pairs_capacity) {
    return guard([&] {
        require(out, "out");
        auto result = find_crossing(points_from_c(points, num_points));
        *out = {result.found ? 1 : 0, result.estimate, result.spread, result.pairs.size()};
        if (pairs != nullptr) {
            for (std::size_t i = 0; i < result.pairs.size() && i < pairs_capacity; i++) {
                const auto &p = result.pairs[i];
                pairs[i] = {p.lower_distance, p.upper_distance, p.found ? 1 : 0, p.p};
            }
        }
    });
}

sd_status sd_threshold_to_csv(
    const sd_threshold_point *points,
    size_t num_points,
    const char *decoder,
    uint64_t seed,
    unsigned workers,
    char **out) {
    return guard([&] {
        require(decoder, "decoder");
        emit(out, threshold_to_csv(points_from_c(points, num_points), {decoder, seed, workers}));
    });
}

sd_status sd_threshold_from_csv(const char *text, sd_threshold_point **points, size_t *num_points) {
    return guard([&] {
        require(text, "text");
        require(points, "points");
        require(num_points, "num_points");
        auto parsed = threshold_from_csv(text);
        auto *buffer = static_cast<sd_threshold_point *>(std::malloc(sizeof(sd_threshold_point) * (parsed.size() + 1)));
        if (buffer == nullptr) {
            throw std::bad_alloc();
        }
        for (std::size_t i = 0; i < parsed.size(); i++) {
            const auto &p = parsed[i];
            buffer[i] = {p.distance, p.p, p.shots, p.failures, p.rate, p.lo, p.hi};
        }
        *points = buffer;
        *num_points = parsed.size();
    });
}

void sd_threshold_points_free(sd_threshold_point *points) {
    std::free(points);
}

sd_status sd_threshold_svg(const sd_threshold_point *points, size_t num_points, const char *decoder, char **out) {
    return guard([&] {
        require(decoder, "decoder");
        auto pts = points_from_c(points, num_points);
        CrossingResult crossing;
        std::set<int> distances;
        for (const auto &p : pts) {
            distances.insert(p.distance);
        }
        if (distances.size() >= 2) {
            try {
                crossing = find_crossing(pts);
            } catch (const std::invalid_argument &) {
                crossing = {};
            }
        }
        emit(out, threshold_svg(pts, crossing, decoder));
    });
}

sd_status sd_sha256_file(const char *path, char hex[65]) {
    return guard([&] {
        require(path, "path");
        require(hex, "hex");
        auto digest = sha256_file(path);
        std::memcpy(hex, digest.c_str(), 65);
    });
}

sd_status sd_sha256_bytes(const void *data, size_t size, char hex[65]) {
    return guard([&] {
        if (size > 0) {
            require(data, "data");
        }
        require(hex, "hex");
        auto digest = sha256_hex(std::string_view(static_cast<const char *>(data), size));
        std::memcpy(hex, digest.c_str(), 65);
    });
}

}  // extern "C"
