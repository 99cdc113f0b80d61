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

#ifndef SURFDEC_FEASIBILITY_H
#define SURFDEC_FEASIBILITY_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "surfdec/harness.h"

namespace surfdec {

/// Cores in the reference supercomputer used for multi-core projections.
inline constexpr std::uint64_t kLumiCores = 362496;

/// Seconds per 10^6 errors for each of the three passes.
struct PassTimes {
    double generate = 0;
    double mwpm = 0;
    double bposd = 0;
};

struct StratumTiming {
    std::uint64_t count = 0;
    PassTimes per_million;
};

struct TimingProfile {
    int distance = 0;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    /// Over the uniform sample.
    PassTimes per_million;
    /// weight < d/2, from the uniform sample plus a dedicated low-weight
    /// sample (uniform errors almost never have low weight).
    StratumTiming low;
    /// weight >= d/2, from the uniform sample.
    StratumTiming high;
    /// Logical failures seen in each decoder pass, as a sanity record.
    std::uint64_t mwpm_failures = 0;
    std::uint64_t bposd_failures = 0;
    bool pinned = false;
};

struct MeasureOptions {
    std::uint64_t low_weight_samples = 10000;
    /// Pin the calling thread to its current CPU for the measurement.
    bool pin_core = true;
};

/// Times error generation (drawing the error and its syndrome), MWPM
/// decoding and BPOSD decoding in separate single-threaded passes over the
/// same materialized errors. Decoder passes include applying the correction
/// and classifying the residual. Works for any distance. Throws
/// std::invalid_argument when num_samples is 0.
TimingProfile measure_rates(
    const std::shared_ptr<const SurfaceCode> &code,
    const DecoderPair &decoders,
    std::uint64_t num_samples,
    std::uint64_t seed,
    const MeasureOptions &options = {});

/// 2^(d^2) as a double. Throws std::invalid_argument for an invalid distance
/// or an overflowing count.
double error_space_size(int distance);

/// T_i = t_i * 2^(d^2) / 10^6, t_i in seconds per 10^6 errors. Throws
/// std::invalid_argument unless t_i is finite and positive.
double extrapolate_single_core(double t_per_million, int distance);
/// T_m = T_i / n_c. Throws std::invalid_argument for n_c < 1 or T_i < 0.
double extrapolate_multicore(double single_core_seconds, std::uint64_t cores);
/// Inverse of the two steps above: the per-10^6 time implied by a
/// multi-core projection.
double per_million_from_multicore(double multicore_seconds, std::uint64_t cores, int distance);

struct ProjectionRow {
    int distance = 0;
    double num_errors = 0;
    std::string decoder;
    double probability = 0;
    double t_per_million = 0;
    double single_core_seconds = 0;
    double multicore_seconds = 0;
    std::uint64_t cores = 0;
};

/// One row per (distance, decoder), MWPM before BPOSD.
std::vector<ProjectionRow> project(
    const std::vector<int> &distances, double t_mwpm, double t_bposd, double probability, std::uint64_t cores);

/// "33554432" for counts below 10^10, otherwise "5.6295e+14".
std::string format_error_count(double count);

std::string projection_csv(const std::vector<ProjectionRow> &rows);
/// Dist / Nr. errors / Decoder / Prob. / Time columns as aligned text.
std::string projection_table(const std::vector<ProjectionRow> &rows);
std::string timing_json(const std::vector<TimingProfile> &profiles, const std::vector<ProjectionRow> &rows);
/// Projected wall time against core count for both decoders at one
/// distance, log-log, with a vertical line at `marker_cores`.
std::string core_scaling_svg(int distance, double t_mwpm, double t_bposd, std::uint64_t marker_cores);

}  // namespace surfdec

#endif
