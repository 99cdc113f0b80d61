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

#ifndef SURFDEC_THRESHOLD_H
#define SURFDEC_THRESHOLD_H

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "surfdec/decoder.h"

namespace surfdec {

struct ThresholdPoint {
    int distance = 0;
    double p = 0;
    std::uint64_t shots = 0;
    std::uint64_t failures = 0;
    double rate = 0;
    /// Wilson 95% interval.
    double lo = 0;
    double hi = 0;
};

struct ThresholdOptions {
    /// 0 selects std::thread::hardware_concurrency().
    unsigned workers = 1;
    /// Decode each syndrome once up front when the code has at most
    /// kSyndromeCacheMaxChecks checks.
    bool syndrome_cache = true;
    int bp_max_iterations = 32;
};

/// Wilson score interval for k successes out of n at 95% confidence.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n);

/// Draws `shots` errors with i.i.d. Bernoulli(p) bits per data qubit, decodes
/// each syndrome and counts logical failures. BPOSD uses p (clamped away from
/// 0 and 1) as its channel prior. Shots are drawn in fixed blocks with seeds
/// derived from (seed, block, distance, p), so the point depends only on its
/// arguments, not on the worker count.
///
/// Throws std::invalid_argument unless p is in [0, 1) and shots >= 1.
ThresholdPoint logical_error_rate(
    const std::shared_ptr<const SurfaceCode> &code,
    DecoderKind kind,
    double p,
    std::uint64_t shots,
    std::uint64_t seed,
    const ThresholdOptions &options = {});

/// Every (distance, p) pair of the grids, distances outermost.
std::vector<ThresholdPoint> threshold_sweep(
    DecoderKind kind,
    const std::vector<int> &distances,
    const std::vector<double> &p_grid,
    std::uint64_t shots,
    std::uint64_t seed,
    const ThresholdOptions &options = {});

/// {0.06, 0.08, ..., 0.16}
std::vector<double> default_p_grid();
inline constexpr std::uint64_t kDefaultThresholdShots = 100000;

struct PairCrossing {
    int lower_distance = 0;
    int upper_distance = 0;
    bool found = false;
    double p = 0;
};

struct CrossingResult {
    /// True only when every consecutive pair of distances crosses.
    bool found = false;
    /// Mean of the pairwise crossings.
    double estimate = 0;
    /// max - min of the pairwise crossings.
    double spread = 0;
    std::vector<PairCrossing> pairs;
    std::string message;
};

/// For each pair of consecutive distances d1 < d2, walks the shared p values
/// upwards and returns the first point where rate(d2) - rate(d1) goes from
/// negative to non-negative, linearly interpolated between the bracketing
/// grid points. Throws std::invalid_argument for fewer than two distances or
/// a pair with fewer than two shared p values.
CrossingResult find_crossing(const std::vector<ThresholdPoint> &points);

inline constexpr int kThresholdCsvVersion = 1;
inline constexpr const char *kThresholdCsvHeader = "distance,p,shots,failures,rate,lo,hi";

struct ThresholdRunInfo {
    std::string decoder;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

std::string threshold_to_csv(const std::vector<ThresholdPoint> &points, const ThresholdRunInfo &info);
/// Throws FileError (Format, Truncated or Version) on malformed input.
std::vector<ThresholdPoint> threshold_from_csv(const std::string &text, const std::string &source = "<memory>");

/// Logical error rate against p, one curve per distance, log y, with a
/// marker at the crossing when one was found.
std::string threshold_svg(
    const std::vector<ThresholdPoint> &points, const CrossingResult &crossing, const std::string &decoder);

}  // namespace surfdec

#endif
