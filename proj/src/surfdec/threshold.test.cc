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

#include "surfdec/threshold.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "surfdec/errors.h"

using namespace surfdec;

namespace {

std::shared_ptr<const SurfaceCode> make_code(int d) {
    return std::make_shared<const SurfaceCode>(d);
}

// Exact logical error rate at d = 3: the Bernoulli(p) mass of every error the
// decoder fails on, found by decoding all 512 errors one at a time.
double exact_d3_rate(DecoderKind kind, double p) {
    auto code = make_code(3);
    DecoderConfig config;
    config.error_probability = p;
    auto decoder = make_decoder(kind, code, config);
    const unsigned n = 9;
    double rate = 0;
    for (std::uint64_t e = 0; e < (1u << n); e++) {
        auto error = BitString::from_integer(e, n);
        auto out = decoder->decode(code->syndrome_of(error));
        auto residual = error ^ out.correction;
        EXPECT_FALSE(code->syndrome_of(residual).any());
        bool flip = false;
        for (auto q : code->logical_z_support()) {
            flip ^= residual.get(q);
        }
        if (flip) {
            int w = oracle::popcount(e);
            rate += std::pow(p, w) * std::pow(1 - p, static_cast<int>(n) - w);
        }
    }
    return rate;
}

std::vector<ThresholdPoint> synthetic(const std::vector<int> &distances, const std::vector<double> &grid,
                                      double (*f)(int, double)) {
    std::vector<ThresholdPoint> points;
    for (int d : distances) {
        for (double p : grid) {
            ThresholdPoint pt;
            pt.distance = d;
            pt.p = p;
            pt.rate = f(d, p);
            points.push_back(pt);
        }
    }
    return points;
}

}  // namespace

TEST(threshold, zero_noise_never_fails) {
    auto pt = logical_error_rate(make_code(3), DecoderKind::Mwpm, 0.0, 1000, 1);
    EXPECT_EQ(pt.failures, 0u);
    EXPECT_EQ(pt.rate, 0.0);
    EXPECT_EQ(pt.lo, 0.0);
    EXPECT_GT(pt.hi, 0.0);
}

TEST(threshold, rejects_bad_arguments) {
    EXPECT_THROW(logical_error_rate(make_code(3), DecoderKind::Mwpm, 1.0, 10, 1), std::invalid_argument);
    EXPECT_THROW(logical_error_rate(make_code(3), DecoderKind::Mwpm, -0.1, 10, 1), std::invalid_argument);
    EXPECT_THROW(logical_error_rate(make_code(3), DecoderKind::Mwpm, 0.1, 0, 1), std::invalid_argument);
}

TEST(threshold, wilson_interval) {
    auto [lo, hi] = wilson_interval(5, 10);
    EXPECT_NEAR(lo, 0.2366, 1e-4);
    EXPECT_NEAR(hi, 0.7634, 1e-4);
    auto [lo0, hi0] = wilson_interval(0, 10);
    EXPECT_EQ(lo0, 0.0);
    EXPECT_NEAR(hi0, 0.2775, 1e-4);
    auto [lo1, hi1] = wilson_interval(10, 10);
    EXPECT_NEAR(lo1, 0.7225, 1e-4);
    EXPECT_EQ(hi1, 1.0);
}

TEST(threshold, d3_low_noise_matches_exact_rate) {
    const double p = 0.01;
    double exact = exact_d3_rate(DecoderKind::Mwpm, p);
    // Only errors of weight >= 2 can fail, so the rate is O(p^2).
    EXPECT_GT(exact, 0);
    EXPECT_LT(exact, 36 * p * p);
    auto pt = logical_error_rate(make_code(3), DecoderKind::Mwpm, p, 1000000, 11);
    double se = std::sqrt(exact * (1 - exact) / 1e6);
    EXPECT_NEAR(pt.rate, exact, 5 * se);
}

TEST(threshold, d3_monte_carlo_matches_exact_rate) {
    for (double p : {0.05, 0.1, 0.15}) {
        double exact = exact_d3_rate(DecoderKind::Mwpm, p);
        auto pt = logical_error_rate(make_code(3), DecoderKind::Mwpm, p, 1000000, 2024);
        double se = std::sqrt(exact * (1 - exact) / 1e6);
        EXPECT_NEAR(pt.rate, exact, 5 * se) << "p = " << p;
        EXPECT_LE(pt.lo, pt.rate);
        EXPECT_GE(pt.hi, pt.rate);
    }
}

TEST(threshold, d3_bposd_matches_exact_rate) {
    const double p = 0.1;
    double exact = exact_d3_rate(DecoderKind::Bposd, p);
    auto pt = logical_error_rate(make_code(3), DecoderKind::Bposd, p, 200000, 5);
    double se = std::sqrt(exact * (1 - exact) / 2e5);
    EXPECT_NEAR(pt.rate, exact, 5 * se);
}

TEST(threshold, cache_and_direct_decoding_agree) {
    ThresholdOptions cached, direct;
    direct.syndrome_cache = false;
    auto a = logical_error_rate(make_code(5), DecoderKind::Mwpm, 0.1, 20000, 3, cached);
    auto b = logical_error_rate(make_code(5), DecoderKind::Mwpm, 0.1, 20000, 3, direct);
    EXPECT_EQ(a.failures, b.failures);
}

TEST(threshold, seeded_and_worker_independent) {
    ThresholdOptions one, three;
    three.workers = 3;
    auto a = logical_error_rate(make_code(5), DecoderKind::Mwpm, 0.08, 30000, 9, one);
    auto b = logical_error_rate(make_code(5), DecoderKind::Mwpm, 0.08, 30000, 9, three);
    auto c = logical_error_rate(make_code(5), DecoderKind::Mwpm, 0.08, 30000, 10, one);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_NE(a.failures, c.failures);
}

TEST(threshold, rate_grows_with_p) {
    auto points = threshold_sweep(DecoderKind::Mwpm, {3}, {0.02, 0.05, 0.1, 0.15, 0.2}, 50000, 4);
    for (std::size_t i = 1; i < points.size(); i++) {
        EXPECT_GE(points[i].hi, points[i - 1].lo);
        EXPECT_GT(points[i].rate, points[i - 1].rate);
    }
}

TEST(threshold, beyond_word_codes) {
    auto pt = logical_error_rate(make_code(9), DecoderKind::Mwpm, 0.05, 200, 1);
    EXPECT_EQ(pt.shots, 200u);
    EXPECT_LT(pt.rate, 0.2);
}

TEST(threshold, synthetic_power_law_crossing) {
    auto f = [](int d, double p) { return std::pow(p / 0.1, d); };
    auto points = synthetic({3, 5, 7}, {0.06, 0.08, 0.10, 0.12, 0.14, 0.16}, f);
    auto result = find_crossing(points);
    ASSERT_TRUE(result.found);
    EXPECT_NEAR(result.estimate, 0.1, 1e-6);
    EXPECT_NEAR(result.spread, 0.0, 1e-12);
    ASSERT_EQ(result.pairs.size(), 2u);
    EXPECT_EQ(result.pairs[0].lower_distance, 3);
    EXPECT_EQ(result.pairs[1].upper_distance, 7);
}

TEST(threshold, interpolates_between_grid_points) {
    // Linear curves through 0.1 with slope d: the difference is linear in p,
    // so interpolation is exact.
    auto f = [](int d, double p) { return 0.2 + d * (p - 0.1); };
    auto result = find_crossing(synthetic({3, 5}, {0.05, 0.09, 0.13}, f));
    ASSERT_TRUE(result.found);
    EXPECT_NEAR(result.estimate, 0.1, 1e-12);
}

TEST(threshold, disjoint_curves_report_no_crossing) {
    auto f = [](int d, double p) { return p / d; };
    auto result = find_crossing(synthetic({3, 5}, {0.06, 0.1, 0.14}, f));
    EXPECT_FALSE(result.found);
    EXPECT_EQ(result.message, "no crossing in range");
    EXPECT_FALSE(result.pairs[0].found);
}

TEST(threshold, crossing_needs_two_distances) {
    auto f = [](int, double p) { return p; };
    EXPECT_THROW(find_crossing(synthetic({3}, {0.1, 0.2}, f)), std::invalid_argument);
    auto points = synthetic({3}, {0.1, 0.2}, f);
    auto other = synthetic({5}, {0.3, 0.4}, f);
    points.insert(points.end(), other.begin(), other.end());
    EXPECT_THROW(find_crossing(points), std::invalid_argument);
}

TEST(threshold, csv_round_trip) {
    auto points = threshold_sweep(DecoderKind::Mwpm, {3, 5}, {0.05, 0.1}, 2000, 1);
    auto text = threshold_to_csv(points, {"mwpm", 1, 1});
    EXPECT_EQ(text.rfind("# surfdec-threshold v1 decoder=mwpm seed=1 workers=1\ndistance,p,shots,failures,rate,lo,hi\n", 0),
              0u);
    auto back = threshold_from_csv(text);
    ASSERT_EQ(back.size(), points.size());
    for (std::size_t i = 0; i < back.size(); i++) {
        EXPECT_EQ(back[i].p, points[i].p);
        EXPECT_EQ(back[i].failures, points[i].failures);
        EXPECT_EQ(back[i].rate, points[i].rate);
        EXPECT_EQ(back[i].hi, points[i].hi);
    }
    EXPECT_EQ(threshold_to_csv(back, {"mwpm", 1, 1}), text);
}

TEST(threshold, csv_rejects_malformed_input) {
    auto kind = [](const std::string &text) {
        try {
            threshold_from_csv(text);
        } catch (const FileError &e) {
            return e.kind();
        }
        return FileErrorKind::Io;
    };
    EXPECT_EQ(kind(""), FileErrorKind::Truncated);
    EXPECT_EQ(kind("# surfdec-threshold v9 decoder=mwpm\n"), FileErrorKind::Version);
    EXPECT_EQ(kind("# surfdec-threshold v1 decoder=mwpm\n"), FileErrorKind::Truncated);
    EXPECT_EQ(kind("# surfdec-threshold v1\ndistance,p,shots,failures,rate,lo,hi,extra\n"), FileErrorKind::Format);
    EXPECT_EQ(kind("# surfdec-threshold v1\ndistance,p,shots,failures,rate,lo,hi\n3,0.1,10,11,1.1,0,1\n"),
              FileErrorKind::Format);
    EXPECT_EQ(kind("# surfdec-threshold v1\ndistance,p,shots,failures,rate,lo,hi\n3,x,10,1,0.1,0,1\n"),
              FileErrorKind::Format);
}

TEST(threshold, svg_marks_crossing) {
    auto f = [](int d, double p) { return std::pow(p / 0.1, d); };
    auto points = synthetic({3, 5}, {0.06, 0.1, 0.14}, f);
    auto svg = threshold_svg(points, find_crossing(points), "MWPM");
    EXPECT_NE(svg.find("p = 0.1000"), std::string::npos);
    EXPECT_NE(svg.find(">d = 3<"), std::string::npos);
    EXPECT_NE(svg.find(">d = 5<"), std::string::npos);
}
