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

#ifndef SURFDEC_HARNESS_H
#define SURFDEC_HARNESS_H

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "surfdec/decoder.h"

namespace surfdec {

enum class RunMode { Exhaustive, Sampled, Stratified };

const char *run_mode_name(RunMode mode);
RunMode parse_run_mode(const std::string &name);

struct WeightCounts {
    std::uint64_t total = 0;
    std::uint64_t mwpm_only_fail = 0;
    std::uint64_t bposd_only_fail = 0;
    std::uint64_t both_fail = 0;

    bool operator==(const WeightCounts &) const = default;
};

enum class FailureCategory { MwpmOnly = 0, BposdOnly = 1, Both = 2 };
const char *failure_category_name(FailureCategory category);

inline constexpr std::size_t kDefaultExampleCap = 1000;

/// Per-weight comparison counters for one decoder pair.
///
/// Counters add under merge(), so shard results combine in any order. The
/// example lists hold the smallest failing error integers in each category,
/// up to example_cap, which is also partition independent.
struct ComparisonStats {
    int distance = 0;
    RunMode mode = RunMode::Exhaustive;
    std::vector<WeightCounts> per_weight;
    std::size_t example_cap = kDefaultExampleCap;
    std::array<std::vector<std::uint64_t>, 3> examples;

    static ComparisonStats empty(int distance, RunMode mode, std::size_t example_cap = kDefaultExampleCap);

    /// Throws std::invalid_argument on distance or mode mismatch.
    void merge(const ComparisonStats &other);
    std::uint64_t total_errors() const;
    bool counters_equal(const ComparisonStats &other) const;
    /// Counters and example lists.
    bool operator==(const ComparisonStats &other) const;

    void record(std::uint64_t error, bool mwpm_failed, bool bposd_failed);
    /// Sorts, deduplicates and truncates the example lists.
    void normalize_examples();

   private:
    // Errors at or above the bound cannot enter a full, normalized list.
    std::array<std::uint64_t, 3> example_bound_ = {~0ull, ~0ull, ~0ull};
};

struct VennCounts {
    std::uint64_t mwpm_only = 0;
    std::uint64_t bposd_only = 0;
    std::uint64_t both = 0;

    bool operator==(const VennCounts &) const = default;
};

VennCounts venn_counts(const ComparisonStats &stats);

enum class DecoderSelector { Mwpm, Bposd };

/// True when the stats are exhaustive and every weight class is complete,
/// i.e. total(w) = C(d^2, w).
bool is_complete_exhaustive(const ComparisonStats &stats);

/// Exclusive failures of one decoder divided by C(d^2, w). Throws
/// UnsupportedError unless is_complete_exhaustive(stats).
std::vector<double> failure_ratio(const ComparisonStats &stats, DecoderSelector which);
/// Exclusive failures divided by the number of errors processed at each
/// weight (0 where nothing was processed). Valid for any mode.
std::vector<double> estimated_failure_ratio(const ComparisonStats &stats, DecoderSelector which);

/// The two decoders under comparison. The first fills the MWPM columns and
/// the second the BPOSD columns; any decoder may be plugged into either.
struct DecoderPair {
    DecoderFactory mwpm;
    DecoderFactory bposd;
};

DecoderPair default_decoders(std::shared_ptr<const SurfaceCode> code, const DecoderConfig &config);

struct HarnessOptions {
    /// 0 selects std::thread::hardware_concurrency().
    unsigned workers = 1;
    std::size_t example_cap = kDefaultExampleCap;
    /// Decode each distinct syndrome once instead of once per error. Only
    /// used when the code has at most kSyndromeCacheMaxChecks checks.
    bool syndrome_cache = true;
};

inline constexpr std::size_t kSyndromeCacheMaxChecks = 16;

/// Largest distance the word-level enumeration supports.
inline constexpr int kMaxHarnessDistance = 7;

/// Per-syndrome logical effect of both decoders' corrections.
///
/// bit 0: the MWPM-column correction overlaps the Z logical oddly; bit 1: the
/// same for the BPOSD column. Construction decodes every syndrome once and
/// throws std::logic_error if a correction does not reproduce its syndrome.
class SyndromeOutcomeCache {
   public:
    SyndromeOutcomeCache(const SurfaceCode &code, const DecoderPair &decoders, unsigned workers);

    std::uint8_t flips(std::uint64_t syndrome) const {
        return flips_[syndrome];
    }

   private:
    std::vector<std::uint8_t> flips_;
};

/// Every error integer in [lo, hi) is decoded by both decoders and
/// classified. Throws std::invalid_argument for an empty or out-of-range
/// interval.
ComparisonStats run_exhaustive(
    const std::shared_ptr<const SurfaceCode> &code,
    const DecoderPair &decoders,
    std::uint64_t lo,
    std::uint64_t hi,
    const HarnessOptions &options = {});

/// Uniform error integers from a seeded generator. Samples are drawn in fixed
/// blocks with per-block seeds, so the result does not depend on workers.
ComparisonStats run_sampled(
    const std::shared_ptr<const SurfaceCode> &code,
    const DecoderPair &decoders,
    std::uint64_t num_samples,
    std::uint64_t seed,
    const HarnessOptions &options = {});

/// per_weight uniform errors of each listed Hamming weight.
ComparisonStats run_stratified(
    const std::shared_ptr<const SurfaceCode> &code,
    const DecoderPair &decoders,
    const std::vector<int> &weights,
    std::uint64_t per_weight,
    std::uint64_t seed,
    const HarnessOptions &options = {});

/// Outcome of every error of the code, indexed by error integer: bit 0 set
/// when the MWPM column fails, bit 1 when the BPOSD column fails. Limited to
/// codes with at most 25 data qubits.
std::vector<std::uint8_t> exhaustive_outcomes(
    const std::shared_ptr<const SurfaceCode> &code, const DecoderPair &decoders, unsigned workers = 1);

/// Draws the error integers used by run_sampled's block b.
void sample_block(
    std::uint64_t seed, std::uint64_t block, std::size_t count, std::uint64_t mask, std::vector<std::uint64_t> &out);
inline constexpr std::size_t kSampleBlock = 4096;

unsigned resolve_workers(unsigned requested);

}  // namespace surfdec

#endif
