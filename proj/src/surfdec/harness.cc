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

#include "surfdec/harness.h"

#include <algorithm>
#include <exception>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "surfdec/errors.h"
#include "surfdec/parallel.h"

namespace surfdec {

namespace {

void require_word_code(const SurfaceCode &code) {
    if (code.distance() > kMaxHarnessDistance) {
        throw std::invalid_argument(
            "the comparison harness supports distances up to " + std::to_string(kMaxHarnessDistance));
    }
}

std::uint64_t correction_word(const DecodeOutcome &out) {
    return out.correction.to_integer();
}

// Classifies single errors against both decoders, either through a shared
// syndrome cache or by decoding directly with private decoder instances.
class ErrorClassifier {
   public:
    ErrorClassifier(const SurfaceCode &code, const DecoderPair &decoders, const SyndromeOutcomeCache *cache)
        : code_(code), cache_(cache), syndrome_(code.num_checks()) {
        if (cache_ == nullptr) {
            mwpm_ = decoders.mwpm();
            bposd_ = decoders.bposd();
        }
    }

    // Returns bit 0 = MWPM column failed, bit 1 = BPOSD column failed.
    std::uint8_t classify(std::uint64_t error) {
        auto s = code_.syndrome_of(error);
        std::uint8_t logical = code_.logical_flip(error) ? 3 : 0;
        if (cache_ != nullptr) {
            return logical ^ cache_->flips(s);
        }
        syndrome_.words()[0] = s;
        return static_cast<std::uint8_t>(residual_fails(error, *mwpm_, out_a_) | (residual_fails(error, *bposd_, out_b_) << 1));
    }

   private:
    std::uint8_t residual_fails(std::uint64_t error, Decoder &decoder, DecodeOutcome &out) {
        decoder.decode_into(syndrome_, out);
        auto residual = error ^ correction_word(out);
        if (code_.syndrome_of(residual) != 0) {
            throw std::logic_error(
                std::string("decoder ") + decoder_name(decoder.kind()) +
                " returned a correction that does not reproduce the syndrome");
        }
        return code_.logical_flip(residual) ? 1 : 0;
    }

    const SurfaceCode &code_;
    const SyndromeOutcomeCache *cache_;
    std::unique_ptr<Decoder> mwpm_;
    std::unique_ptr<Decoder> bposd_;
    BitString syndrome_;
    DecodeOutcome out_a_;
    DecodeOutcome out_b_;
};

std::optional<SyndromeOutcomeCache> maybe_cache(
    const SurfaceCode &code, const DecoderPair &decoders, const HarnessOptions &options) {
    if (options.syndrome_cache && code.num_checks() <= kSyndromeCacheMaxChecks) {
        return SyndromeOutcomeCache(code, decoders, resolve_workers(options.workers));
    }
    return std::nullopt;
}

ComparisonStats merge_all(std::vector<ComparisonStats> &parts) {
    auto total = std::move(parts.front());
    for (std::size_t i = 1; i < parts.size(); i++) {
        total.merge(parts[i]);
    }
    total.normalize_examples();
    return total;
}

}  // namespace

const char *run_mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::Exhaustive:
            return "exhaustive";
        case RunMode::Sampled:
            return "sampled";
        case RunMode::Stratified:
            return "stratified";
    }
    return "unknown";
}

RunMode parse_run_mode(const std::string &name) {
    if (name == "exhaustive") {
        return RunMode::Exhaustive;
    }
    if (name == "sampled" || name == "sample") {
        return RunMode::Sampled;
    }
    if (name == "stratified") {
        return RunMode::Stratified;
    }
    throw std::invalid_argument("unknown run mode '" + name + "'");
}

const char *failure_category_name(FailureCategory category) {
    switch (category) {
        case FailureCategory::MwpmOnly:
            return "mwpm_only";
        case FailureCategory::BposdOnly:
            return "bposd_only";
        case FailureCategory::Both:
            return "both";
    }
    return "unknown";
}

ComparisonStats ComparisonStats::empty(int distance, RunMode mode, std::size_t example_cap) {
    ComparisonStats stats;
    stats.distance = distance;
    stats.mode = mode;
    stats.per_weight.assign(static_cast<std::size_t>(distance) * distance + 1, WeightCounts{});
    stats.example_cap = example_cap;
    return stats;
}

void ComparisonStats::merge(const ComparisonStats &other) {
    if (other.distance != distance || other.per_weight.size() != per_weight.size()) {
        throw std::invalid_argument("cannot merge statistics of different distances");
    }
    if (other.mode != mode) {
        throw std::invalid_argument(
            std::string("cannot merge ") + run_mode_name(mode) + " and " + run_mode_name(other.mode) + " statistics");
    }
    for (std::size_t w = 0; w < per_weight.size(); w++) {
        per_weight[w].total += other.per_weight[w].total;
        per_weight[w].mwpm_only_fail += other.per_weight[w].mwpm_only_fail;
        per_weight[w].bposd_only_fail += other.per_weight[w].bposd_only_fail;
        per_weight[w].both_fail += other.per_weight[w].both_fail;
    }
    example_cap = std::min(example_cap, other.example_cap);
    for (std::size_t c = 0; c < examples.size(); c++) {
        examples[c].insert(examples[c].end(), other.examples[c].begin(), other.examples[c].end());
    }
    normalize_examples();
}

std::uint64_t ComparisonStats::total_errors() const {
    std::uint64_t total = 0;
    for (const auto &row : per_weight) {
        total += row.total;
    }
    return total;
}

bool ComparisonStats::counters_equal(const ComparisonStats &other) const {
    return distance == other.distance && mode == other.mode && per_weight == other.per_weight;
}

void ComparisonStats::record(std::uint64_t error, bool mwpm_failed, bool bposd_failed) {
    auto &row = per_weight[weight(error)];
    row.total++;
    if (!mwpm_failed && !bposd_failed) {
        return;
    }
    FailureCategory category;
    if (mwpm_failed && bposd_failed) {
        row.both_fail++;
        category = FailureCategory::Both;
    } else if (mwpm_failed) {
        row.mwpm_only_fail++;
        category = FailureCategory::MwpmOnly;
    } else {
        row.bposd_only_fail++;
        category = FailureCategory::BposdOnly;
    }
    auto index = static_cast<std::size_t>(category);
    auto &list = examples[index];
    if (example_cap == 0 || error >= example_bound_[index]) {
        return;
    }
    list.push_back(error);
    if (list.size() > 2 * example_cap) {
        normalize_examples();
    }
}

void ComparisonStats::normalize_examples() {
    for (std::size_t c = 0; c < examples.size(); c++) {
        auto &list = examples[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (list.size() > example_cap) {
            list.resize(example_cap);
        }
        example_bound_[c] = list.size() == example_cap && !list.empty() ? list.back() : ~0ull;
    }
}

bool ComparisonStats::operator==(const ComparisonStats &other) const {
    return counters_equal(other) && example_cap == other.example_cap && examples == other.examples;
}

VennCounts venn_counts(const ComparisonStats &stats) {
    VennCounts venn;
    for (const auto &row : stats.per_weight) {
        venn.mwpm_only += row.mwpm_only_fail;
        venn.bposd_only += row.bposd_only_fail;
        venn.both += row.both_fail;
    }
    return venn;
}

bool is_complete_exhaustive(const ComparisonStats &stats) {
    if (stats.mode != RunMode::Exhaustive) {
        return false;
    }
    auto n = static_cast<unsigned>(stats.per_weight.size() - 1);
    for (unsigned w = 0; w <= n; w++) {
        if (stats.per_weight[w].total != binomial(n, w)) {
            return false;
        }
    }
    return true;
}

namespace {

std::uint64_t exclusive_failures(const WeightCounts &row, DecoderSelector which) {
    return which == DecoderSelector::Mwpm ? row.mwpm_only_fail : row.bposd_only_fail;
}

}  // namespace

std::vector<double> failure_ratio(const ComparisonStats &stats, DecoderSelector which) {
    if (stats.mode != RunMode::Exhaustive) {
        throw UnsupportedError(
            std::string("exact failure ratios need exhaustive statistics, got ") + run_mode_name(stats.mode));
    }
    if (!is_complete_exhaustive(stats)) {
        throw UnsupportedError("exact failure ratios need a complete exhaustive enumeration");
    }
    auto n = static_cast<unsigned>(stats.per_weight.size() - 1);
    std::vector<double> ratio(stats.per_weight.size(), 0.0);
    for (unsigned w = 0; w <= n; w++) {
        auto count = exclusive_failures(stats.per_weight[w], which);
        ratio[w] = count == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(binomial(n, w));
    }
    return ratio;
}

std::vector<double> estimated_failure_ratio(const ComparisonStats &stats, DecoderSelector which) {
    std::vector<double> ratio(stats.per_weight.size(), 0.0);
    for (std::size_t w = 0; w < ratio.size(); w++) {
        const auto &row = stats.per_weight[w];
        if (row.total > 0) {
            ratio[w] = static_cast<double>(exclusive_failures(row, which)) / static_cast<double>(row.total);
        }
    }
    return ratio;
}

DecoderPair default_decoders(std::shared_ptr<const SurfaceCode> code, const DecoderConfig &config) {
    return DecoderPair{
        decoder_factory(DecoderKind::Mwpm, code, config),
        decoder_factory(DecoderKind::Bposd, code, config),
    };
}

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SyndromeOutcomeCache::SyndromeOutcomeCache(const SurfaceCode &code, const DecoderPair &decoders, unsigned workers) {
    require_word_code(code);
    const std::size_t m = code.num_checks();
    if (m > 32) {
        throw std::invalid_argument("too many checks for a dense syndrome cache");
    }
    flips_.assign(std::size_t{1} << m, 0);
    parallel_chunks(resolve_workers(workers), flips_.size(), [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        auto mwpm = decoders.mwpm();
        auto bposd = decoders.bposd();
        BitString syndrome(m);
        DecodeOutcome out;
        for (auto s = begin; s < end; s++) {
            syndrome.words()[0] = s;
            std::uint8_t bits = 0;
            int slot = 0;
            for (Decoder *decoder : {mwpm.get(), bposd.get()}) {
                decoder->decode_into(syndrome, out);
                auto c = correction_word(out);
                if (code.syndrome_of(c) != s) {
                    throw std::logic_error(
                        std::string("decoder ") + decoder_name(decoder->kind()) +
                        " returned a correction that does not reproduce syndrome " + std::to_string(s));
                }
                if (code.logical_flip(c)) {
                    bits |= static_cast<std::uint8_t>(1 << slot);
                }
                slot++;
            }
            flips_[s] = bits;
        }
    });
}

ComparisonStats run_exhaustive(
    const std::shared_ptr<const SurfaceCode> &code,
    const DecoderPair &decoders,
    std::uint64_t lo,
    std::uint64_t hi,
    const HarnessOptions &options) {
    require_word_code(*code);
    if (lo >= hi) {
        throw std::invalid_argument("exhaustive range must satisfy lo < hi");
    }
    if (code->num_data() < 64 && hi > (std::uint64_t{1} << code->num_data())) {
        throw std::invalid_argument("exhaustive range exceeds 2^(d^2)");
    }
    auto cache = maybe_cache(*code, decoders, options);
    const SyndromeOutcomeCache *cache_ptr = cache ? &*cache : nullptr;
    unsigned workers = resolve_workers(options.workers);
    std::vector<ComparisonStats> parts(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, hi - lo)),
        ComparisonStats::empty(code->distance(), RunMode::Exhaustive, options.example_cap));
    parallel_chunks(workers, hi - lo, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        ErrorClassifier classifier(*code, decoders, cache_ptr);
        auto &stats = parts[w];
        for (auto e = lo + begin; e < lo + end; e++) {
            auto fails = classifier.classify(e);
            stats.record(e, fails & 1, fails & 2);
        }
    });
    return merge_all(parts);
}

void sample_block(
    std::uint64_t seed, std::uint64_t block, std::size_t count, std::uint64_t mask, std::vector<std::uint64_t> &out) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(block),
        static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 rng(seq);
    out.resize(count);
    for (auto &e : out) {
        e = rng() & mask;
    }
}

ComparisonStats run_sampled(
    const std::shared_ptr<const SurfaceCode> &code,
    const DecoderPair &decoders,
    std::uint64_t num_samples,
    std::uint64_t seed,
    const HarnessOptions &options) {
    require_word_code(*code);
    if (num_samples < 1) {
        throw std::invalid_argument("sampled runs need at least one sample");
    }
    auto cache = maybe_cache(*code, decoders, options);
    const SyndromeOutcomeCache *cache_ptr = cache ? &*cache : nullptr;
    const std::uint64_t num_blocks = (num_samples + kSampleBlock - 1) / kSampleBlock;
    unsigned workers = resolve_workers(options.workers);
    std::vector<ComparisonStats> parts(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, num_blocks)),
        ComparisonStats::empty(code->distance(), RunMode::Sampled, options.example_cap));
    const auto mask = code->error_mask();
    parallel_chunks(workers, num_blocks, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        ErrorClassifier classifier(*code, decoders, cache_ptr);
        std::vector<std::uint64_t> errors;
        for (auto b = begin; b < end; b++) {
            auto count = static_cast<std::size_t>(std::min<std::uint64_t>(kSampleBlock, num_samples - b * kSampleBlock));
            sample_block(seed, b, count, mask, errors);
            for (auto e : errors) {
                auto fails = classifier.classify(e);
                parts[w].record(e, fails & 1, fails & 2);
            }
        }
    });
    return merge_all(parts);
}

ComparisonStats run_stratified(
    const std::shared_ptr<const SurfaceCode> &code,
    const DecoderPair &decoders,
    const std::vector<int> &weights,
    std::uint64_t per_weight,
    std::uint64_t seed,
    const HarnessOptions &options) {
    require_word_code(*code);
    const auto n = static_cast<int>(code->num_data());
    if (per_weight < 1) {
        throw std::invalid_argument("stratified runs need at least one sample per weight");
    }
    if (weights.empty()) {
        throw std::invalid_argument("stratified runs need at least one weight");
    }
    for (int w : weights) {
        if (w < 0 || w > n) {
            throw std::invalid_argument("stratum weight out of range [0, d^2]");
        }
    }
    auto cache = maybe_cache(*code, decoders, options);
    const SyndromeOutcomeCache *cache_ptr = cache ? &*cache : nullptr;

    // Work items are (weight index, block) pairs, laid out weight-major.
    const std::uint64_t blocks_per_weight = (per_weight + kSampleBlock - 1) / kSampleBlock;
    const std::uint64_t num_items = blocks_per_weight * weights.size();
    unsigned workers = resolve_workers(options.workers);
    std::vector<ComparisonStats> parts(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, num_items)),
        ComparisonStats::empty(code->distance(), RunMode::Stratified, options.example_cap));
    parallel_chunks(workers, num_items, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        ErrorClassifier classifier(*code, decoders, cache_ptr);
        std::vector<int> positions(n);
        std::vector<int> chosen;
        for (auto item = begin; item < end; item++) {
            int target = weights[item / blocks_per_weight];
            auto block = item % blocks_per_weight;
            auto count = std::min<std::uint64_t>(kSampleBlock, per_weight - block * kSampleBlock);
            std::seed_seq seq{
                static_cast<std::uint32_t>(seed),
                static_cast<std::uint32_t>(seed >> 32),
                static_cast<std::uint32_t>(target),
                static_cast<std::uint32_t>(block)};
            std::mt19937_64 rng(seq);
            std::iota(positions.begin(), positions.end(), 0);
            for (std::uint64_t i = 0; i < count; i++) {
                chosen.clear();
                std::sample(positions.begin(), positions.end(), std::back_inserter(chosen), target, rng);
                std::uint64_t e = 0;
                for (int q : chosen) {
                    e |= std::uint64_t{1} << q;
                }
                auto fails = classifier.classify(e);
                parts[w].record(e, fails & 1, fails & 2);
            }
        }
    });
    return merge_all(parts);
}

std::vector<std::uint8_t> exhaustive_outcomes(
    const std::shared_ptr<const SurfaceCode> &code, const DecoderPair &decoders, unsigned workers) {
    if (code->num_data() > 25) {
        throw std::invalid_argument("outcome tables are limited to 25 data qubits");
    }
    HarnessOptions options;
    options.workers = workers;
    auto cache = maybe_cache(*code, decoders, options);
    const SyndromeOutcomeCache *cache_ptr = cache ? &*cache : nullptr;
    std::vector<std::uint8_t> table(std::size_t{1} << code->num_data());
    parallel_chunks(resolve_workers(workers), table.size(), [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        ErrorClassifier classifier(*code, decoders, cache_ptr);
        for (auto e = begin; e < end; e++) {
            table[e] = classifier.classify(e);
        }
    });
    return table;
}

}  // namespace surfdec
