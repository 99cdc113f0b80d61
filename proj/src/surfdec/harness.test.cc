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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "surfdec/errors.h"

using namespace surfdec;

namespace {

std::shared_ptr<const SurfaceCode> make_code(int d) {
    return std::make_shared<const SurfaceCode>(d);
}

ComparisonStats run_shards(
    const std::shared_ptr<const SurfaceCode> &code,
    const DecoderPair &decoders,
    const std::vector<std::uint64_t> &cuts,
    const HarnessOptions &options) {
    std::optional<ComparisonStats> total;
    for (std::size_t i = 0; i + 1 < cuts.size(); i++) {
        auto part = run_exhaustive(code, decoders, cuts[i], cuts[i + 1], options);
        if (total) {
            total->merge(part);
        } else {
            total = part;
        }
    }
    return *total;
}

std::vector<std::uint64_t> uneven_cuts(std::uint64_t end, int shards, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> cuts = {0, end};
    while (static_cast<int>(cuts.size()) < shards + 1) {
        auto c = 1 + rng() % (end - 1);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) {
            cuts.push_back(c);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

}  // namespace

TEST(harness, mode_names) {
    for (auto m : {RunMode::Exhaustive, RunMode::Sampled, RunMode::Stratified}) {
        EXPECT_EQ(parse_run_mode(run_mode_name(m)), m);
    }
    EXPECT_EQ(parse_run_mode("sample"), RunMode::Sampled);
    EXPECT_THROW(parse_run_mode("random"), std::invalid_argument);
}

TEST(harness, d3_exhaustive) {
    auto code = make_code(3);
    auto stats = run_exhaustive(code, default_decoders(code, {}), 0, 512);
    EXPECT_EQ(stats.total_errors(), 512u);
    ASSERT_EQ(stats.per_weight.size(), 10u);
    for (unsigned w = 0; w <= 9; w++) {
        EXPECT_EQ(stats.per_weight[w].total, binomial(9, w));
        const auto &row = stats.per_weight[w];
        EXPECT_LE(row.mwpm_only_fail + row.bposd_only_fail + row.both_fail, row.total);
    }
    for (unsigned w = 0; w <= 1; w++) {
        EXPECT_EQ(stats.per_weight[w], (WeightCounts{binomial(9, w), 0, 0, 0}));
    }
    EXPECT_TRUE(is_complete_exhaustive(stats));
    auto venn = venn_counts(stats);
    std::cout << "d=3 venn: mwpm_only=" << venn.mwpm_only << " bposd_only=" << venn.bposd_only
              << " both=" << venn.both << "\n";
}

TEST(harness, cache_agrees_with_direct_decoding) {
    for (int d : {3, 5}) {
        auto code = make_code(d);
        auto decoders = default_decoders(code, {});
        HarnessOptions direct;
        direct.syndrome_cache = false;
        std::uint64_t hi = d == 3 ? 512 : 60000;
        auto a = run_exhaustive(code, decoders, 0, hi);
        auto b = run_exhaustive(code, decoders, 0, hi, direct);
        EXPECT_EQ(a, b) << "d=" << d;
    }
}

TEST(harness, exhaustive_d5_low_weight_and_totals) {
    auto code = make_code(5);
    auto stats = run_exhaustive(code, default_decoders(code, {}), 0, std::uint64_t{1} << 25);
    EXPECT_EQ(stats.total_errors(), 33554432u);
    for (unsigned w = 0; w <= 25; w++) {
        EXPECT_EQ(stats.per_weight[w].total, binomial(25, w));
    }
    for (unsigned w = 0; w <= 2; w++) {
        EXPECT_EQ(stats.per_weight[w].mwpm_only_fail, 0u);
        EXPECT_EQ(stats.per_weight[w].both_fail, 0u);
        EXPECT_EQ(stats.per_weight[w].bposd_only_fail, 0u);
    }
    // Every deterministic decoder fails on exactly half of the errors with
    // each syndrome, so the two totals coincide.
    auto v = venn_counts(stats);
    EXPECT_EQ(v.mwpm_only + v.both, std::uint64_t{1} << 24);
    EXPECT_EQ(v.bposd_only + v.both, std::uint64_t{1} << 24);
}

TEST(harness, shard_invariance_d3) {
    auto code = make_code(3);
    auto decoders = default_decoders(code, {});
    auto whole = run_exhaustive(code, decoders, 0, 512);
    for (std::uint64_t seed : {1, 2, 3}) {
        auto merged = run_shards(code, decoders, uneven_cuts(512, 7, seed), {});
        EXPECT_EQ(merged, whole);
    }
}

TEST(harness, shard_invariance_d5) {
    auto code = make_code(5);
    auto decoders = default_decoders(code, {});
    auto whole = run_exhaustive(code, decoders, 0, std::uint64_t{1} << 25);
    auto merged = run_shards(code, decoders, uneven_cuts(std::uint64_t{1} << 25, 16, 5), {});
    EXPECT_EQ(merged, whole);
}

TEST(harness, worker_count_does_not_matter) {
    auto code = make_code(5);
    auto decoders = default_decoders(code, {});
    HarnessOptions one, many;
    many.workers = 5;
    EXPECT_EQ(run_exhaustive(code, decoders, 1000, 400000, one), run_exhaustive(code, decoders, 1000, 400000, many));
    EXPECT_EQ(run_sampled(code, decoders, 20000, 9, one), run_sampled(code, decoders, 20000, 9, many));
    EXPECT_EQ(
        run_stratified(code, decoders, {3, 4, 10}, 5000, 9, one),
        run_stratified(code, decoders, {3, 4, 10}, 5000, 9, many));
}

TEST(harness, merge_is_commutative_and_associative) {
    auto code = make_code(3);
    auto decoders = default_decoders(code, {});
    auto a = run_exhaustive(code, decoders, 0, 100);
    auto b = run_exhaustive(code, decoders, 100, 333);
    auto c = run_exhaustive(code, decoders, 333, 512);
    auto ab_c = a;
    ab_c.merge(b);
    ab_c.merge(c);
    auto bc = b;
    bc.merge(c);
    auto a_bc = a;
    a_bc.merge(bc);
    auto cba = c;
    cba.merge(b);
    cba.merge(a);
    EXPECT_EQ(ab_c, a_bc);
    EXPECT_EQ(ab_c, cba);
    EXPECT_EQ(venn_counts(ab_c), venn_counts(run_exhaustive(code, decoders, 0, 512)));
}

TEST(harness, merge_rejects_mismatch) {
    auto a = ComparisonStats::empty(3, RunMode::Exhaustive);
    EXPECT_THROW(a.merge(ComparisonStats::empty(5, RunMode::Exhaustive)), std::invalid_argument);
    EXPECT_THROW(a.merge(ComparisonStats::empty(3, RunMode::Sampled)), std::invalid_argument);
}

TEST(harness, examples_are_smallest_failures) {
    auto code = make_code(3);
    auto decoders = default_decoders(code, {});
    auto outcomes = exhaustive_outcomes(code, decoders);
    std::array<std::vector<std::uint64_t>, 3> expected;
    for (std::uint64_t e = 0; e < 512; e++) {
        switch (outcomes[e]) {
            case 1:
                expected[0].push_back(e);
                break;
            case 2:
                expected[1].push_back(e);
                break;
            case 3:
                expected[2].push_back(e);
                break;
        }
    }
    HarnessOptions opts;
    opts.example_cap = 5;
    opts.workers = 3;
    auto stats = run_shards(code, decoders, {0, 17, 200, 201, 512}, opts);
    for (std::size_t c = 0; c < 3; c++) {
        auto want = expected[c];
        if (want.size() > 5) {
            want.resize(5);
        }
        EXPECT_EQ(stats.examples[c], want) << failure_category_name(static_cast<FailureCategory>(c));
    }
}

TEST(harness, outcome_table_is_deterministic) {
    auto code = make_code(3);
    auto a = exhaustive_outcomes(code, default_decoders(code, {}));
    auto b = exhaustive_outcomes(code, default_decoders(code, {}), 4);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.size(), 512u);
}

TEST(harness, rejects_bad_ranges) {
    auto code = make_code(3);
    auto decoders = default_decoders(code, {});
    EXPECT_THROW(run_exhaustive(code, decoders, 5, 5), std::invalid_argument);
    EXPECT_THROW(run_exhaustive(code, decoders, 0, 513), std::invalid_argument);
    EXPECT_THROW(run_sampled(code, decoders, 0, 1), std::invalid_argument);
    EXPECT_THROW(run_stratified(code, decoders, {10}, 1, 1), std::invalid_argument);
    EXPECT_THROW(run_stratified(code, decoders, {}, 1, 1), std::invalid_argument);
}

TEST(harness, sampled_is_reproducible) {
    auto code = make_code(3);
    auto decoders = default_decoders(code, {});
    auto a = run_sampled(code, decoders, 5000, 42);
    auto b = run_sampled(code, decoders, 5000, 42);
    auto c = run_sampled(code, decoders, 5000, 43);
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a.counters_equal(c));
    EXPECT_EQ(a.total_errors(), 5000u);
    EXPECT_EQ(a.mode, RunMode::Sampled);
}

TEST(harness, sampled_weights_follow_binomial_d5) {
    auto code = make_code(5);
    auto stats = run_sampled(code, default_decoders(code, {}), 1000000, 2026);
    EXPECT_EQ(stats.total_errors(), 1000000u);
    for (unsigned w = 0; w <= 25; w++) {
        double p = static_cast<double>(binomial(25, w)) / 33554432.0;
        double mean = 1e6 * p;
        double sigma = std::sqrt(1e6 * p * (1 - p));
        EXPECT_LE(std::abs(static_cast<double>(stats.per_weight[w].total) - mean), 5 * sigma + 1e-9) << "w=" << w;
    }
}

TEST(harness, sampled_generator_mean_weight_d7) {
    auto code = make_code(7);
    std::vector<std::uint64_t> block;
    double sum = 0;
    std::uint64_t n = 0;
    for (std::uint64_t b = 0; n < 1000000; b++) {
        sample_block(7, b, kSampleBlock, code->error_mask(), block);
        for (auto e : block) {
            sum += static_cast<double>(weight(e));
            n++;
        }
    }
    EXPECT_NEAR(sum / static_cast<double>(n), 24.5, 0.5);
}

TEST(harness, sampled_pipeline_d7) {
    auto code = make_code(7);
    auto stats = run_sampled(code, default_decoders(code, {}), 3000, 1);
    EXPECT_EQ(stats.total_errors(), 3000u);
    EXPECT_EQ(stats.per_weight.size(), 50u);
}

TEST(harness, stratified_counts) {
    auto code = make_code(5);
    auto stats = run_stratified(code, default_decoders(code, {}), {1, 2, 7}, 3000, 3);
    EXPECT_EQ(stats.mode, RunMode::Stratified);
    for (unsigned w = 0; w <= 25; w++) {
        EXPECT_EQ(stats.per_weight[w].total, (w == 1 || w == 2 || w == 7) ? 3000u : 0u);
    }
    EXPECT_EQ(stats.per_weight[1].mwpm_only_fail + stats.per_weight[1].both_fail, 0u);
}

TEST(harness, failure_ratio) {
    auto code = make_code(3);
    auto decoders = default_decoders(code, {});
    auto stats = run_exhaustive(code, decoders, 0, 512);
    auto r = failure_ratio(stats, DecoderSelector::Mwpm);
    ASSERT_EQ(r.size(), 10u);
    for (unsigned w = 0; w <= 9; w++) {
        EXPECT_DOUBLE_EQ(
            r[w], static_cast<double>(stats.per_weight[w].mwpm_only_fail) / static_cast<double>(binomial(9, w)));
    }
    EXPECT_EQ(r[0], 0.0);
    EXPECT_EQ(estimated_failure_ratio(stats, DecoderSelector::Bposd), failure_ratio(stats, DecoderSelector::Bposd));

    auto partial = run_exhaustive(code, decoders, 0, 300);
    EXPECT_THROW(failure_ratio(partial, DecoderSelector::Mwpm), UnsupportedError);
    auto sampled = run_sampled(code, decoders, 100, 1);
    EXPECT_THROW(failure_ratio(sampled, DecoderSelector::Bposd), UnsupportedError);
    EXPECT_EQ(estimated_failure_ratio(ComparisonStats::empty(3, RunMode::Sampled), DecoderSelector::Mwpm),
              std::vector<double>(10, 0.0));
}

TEST(harness, venn_of_empty_stats) {
    EXPECT_EQ(venn_counts(ComparisonStats::empty(5, RunMode::Exhaustive)), (VennCounts{0, 0, 0}));
}

TEST(harness, rejects_large_distance) {
    auto code = make_code(9);
    auto decoders = default_decoders(code, {});
    EXPECT_THROW(run_sampled(code, decoders, 10, 1), std::invalid_argument);
}

TEST(harness, d5_fig_shape) {
    auto code = make_code(5);
    auto stats = run_exhaustive(code, default_decoders(code, {}), 0, std::uint64_t{1} << 25);
    auto m = failure_ratio(stats, DecoderSelector::Mwpm);
    auto b = failure_ratio(stats, DecoderSelector::Bposd);
    std::size_t first = 0;
    while (first < m.size() && m[first] == 0 && b[first] == 0) {
        first++;
    }
    ASSERT_LT(first, m.size());
    EXPECT_GT(b[first], m[first]);
    bool reversed = false;
    for (std::size_t w = first + 1; w < m.size(); w++) {
        reversed |= m[w] > b[w];
    }
    EXPECT_TRUE(reversed);
}
