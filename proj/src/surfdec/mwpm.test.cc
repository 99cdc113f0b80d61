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

#include "surfdec/mwpm.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"

using namespace surfdec;

namespace {

BitString syndrome_bits(std::uint64_t s, std::size_t n) {
    return BitString::from_integer(s, n);
}

}  // namespace

TEST(mwpm, distances_match_floyd_warshall) {
    for (int d : {3, 5, 7}) {
        SurfaceCode code(d);
        DetectionGraph g(code);
        auto fw = oracle::floyd_warshall(code.z_checks(), static_cast<unsigned>(code.num_data()));
        const auto m = code.num_checks();
        for (std::size_t a = 0; a < m; a++) {
            EXPECT_EQ(g.boundary_distance(a), fw[a][m]);
            EXPECT_GE(g.boundary_distance(a), 1);
            auto bp = g.boundary_path(a);
            EXPECT_EQ(static_cast<int>(bp.popcount()), g.boundary_distance(a));
            EXPECT_EQ(code.syndrome_of(bp).ones(), (std::vector<std::uint32_t>{static_cast<std::uint32_t>(a)}));
            for (std::size_t b = 0; b < m; b++) {
                EXPECT_EQ(g.check_distance(a, b), fw[a][b]);
                EXPECT_EQ(g.check_distance(a, b), g.check_distance(b, a));
                if (a == b) {
                    continue;
                }
                auto p = g.path(a, b);
                EXPECT_EQ(static_cast<int>(p.popcount()), g.check_distance(a, b));
                auto s = code.syndrome_of(p).ones();
                std::vector<std::uint32_t> expected = {
                    static_cast<std::uint32_t>(std::min(a, b)), static_cast<std::uint32_t>(std::max(a, b))};
                EXPECT_EQ(s, expected);
            }
        }
    }
}

TEST(mwpm, neighbouring_checks_are_distance_one) {
    SurfaceCode code(3);
    DetectionGraph g(code);
    for (std::size_t a = 0; a < code.num_checks(); a++) {
        for (std::size_t b = a + 1; b < code.num_checks(); b++) {
            bool share = false;
            for (auto q : code.z_checks()[a]) {
                for (auto r : code.z_checks()[b]) {
                    share |= q == r;
                }
            }
            EXPECT_EQ(share, g.check_distance(a, b) == 1);
        }
    }
}

TEST(mwpm, zero_syndrome) {
    auto code = std::make_shared<const SurfaceCode>(5);
    MwpmDecoder dec(code);
    auto out = dec.decode(BitString(12));
    EXPECT_FALSE(out.correction.any());
    EXPECT_TRUE(out.converged);
    EXPECT_EQ(out.decoder, DecoderKind::Mwpm);
    EXPECT_THROW(dec.decode(BitString(11)), std::invalid_argument);
}

TEST(mwpm, minimal_weight_every_syndrome_d3) {
    auto code = std::make_shared<const SurfaceCode>(3);
    auto table = oracle::min_weight_by_full_scan(code->z_checks(), 9);
    MwpmDecoder dec(code);
    for (std::uint64_t s = 0; s < 16; s++) {
        auto out = dec.decode(syndrome_bits(s, 4));
        EXPECT_EQ(code->syndrome_of(out.correction.to_integer()), s);
        EXPECT_EQ(static_cast<int>(out.correction.popcount()), table[s].weight) << "syndrome " << s;
        EXPECT_EQ(dec.last_matching_weight(), table[s].weight);
    }
}

TEST(mwpm, minimal_weight_every_syndrome_d5) {
    auto code = std::make_shared<const SurfaceCode>(5);
    auto table = oracle::min_weight_by_weight_scan(code->z_checks(), 25);
    MwpmDecoder dec(code);
    for (std::uint64_t s = 0; s < 4096; s++) {
        auto out = dec.decode(syndrome_bits(s, 12));
        ASSERT_EQ(code->syndrome_of(out.correction.to_integer()), s);
        ASSERT_EQ(static_cast<int>(out.correction.popcount()), table[s].weight) << "syndrome " << s;
    }
}

TEST(mwpm, single_boundary_defect_d3) {
    auto code = std::make_shared<const SurfaceCode>(3);
    auto table = oracle::min_weight_by_full_scan(code->z_checks(), 9);
    MwpmDecoder dec(code);
    for (std::size_t k = 0; k < 4; k++) {
        if (!code->is_boundary_check(k)) {
            continue;
        }
        auto out = dec.decode(syndrome_bits(std::uint64_t{1} << k, 4));
        EXPECT_EQ(out.correction.popcount(), 1u);
        EXPECT_EQ(table[std::uint64_t{1} << k].weight, 1);
        auto q = out.correction.ones()[0];
        EXPECT_EQ(code->checks_of_qubit()[q].size(), 1u);
    }
}

TEST(mwpm, prefers_the_two_qubit_explanation) {
    auto code = std::make_shared<const SurfaceCode>(5);
    MwpmDecoder dec(code);
    auto e = BitString::from_indices(std::vector<std::uint32_t>{11, 13}, 25);
    auto out = dec.decode(code->syndrome_of(e));
    EXPECT_EQ(out.correction, e);
    EXPECT_EQ(code->classify_residual(e ^ out.correction), ResidualClass::Success);
}

TEST(mwpm, corrects_low_weight_errors) {
    for (int d : {3, 5}) {
        auto code = std::make_shared<const SurfaceCode>(d);
        MwpmDecoder dec(code);
        const auto n = code->num_data();
        const int t = (d - 1) / 2;
        for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); e++) {
            if (static_cast<int>(weight(e)) > t) {
                continue;
            }
            auto bits = BitString::from_integer(e, n);
            auto out = dec.decode(code->syndrome_of(bits));
            EXPECT_EQ(code->classify_residual(bits ^ out.correction), ResidualClass::Success);
        }
    }
}

TEST(mwpm, matching_weight_matches_exact_oracle) {
    auto code = std::make_shared<const SurfaceCode>(7);
    auto fw = oracle::floyd_warshall(code->z_checks(), 49);
    const auto m = code->num_checks();
    MwpmDecoder dec(code);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; trial++) {
        std::size_t k = 1 + rng() % 10;
        std::vector<std::uint32_t> defects(m);
        for (std::size_t i = 0; i < m; i++) {
            defects[i] = static_cast<std::uint32_t>(i);
        }
        std::shuffle(defects.begin(), defects.end(), rng);
        defects.resize(k);
        std::sort(defects.begin(), defects.end());
        std::vector<std::vector<std::int64_t>> pair(k, std::vector<std::int64_t>(k, 0));
        std::vector<std::int64_t> boundary(k);
        for (std::size_t i = 0; i < k; i++) {
            boundary[i] = fw[defects[i]][m];
            for (std::size_t j = 0; j < k; j++) {
                pair[i][j] = fw[defects[i]][defects[j]];
            }
        }
        auto s = BitString::from_indices(defects, m);
        auto out = dec.decode(s);
        EXPECT_EQ(code->syndrome_of(out.correction), s);
        EXPECT_EQ(dec.last_matching_weight(), oracle::min_matching_cost(pair, boundary));
        EXPECT_LE(static_cast<std::int64_t>(out.correction.popcount()), dec.last_matching_weight());
    }
}

TEST(mwpm, deterministic) {
    auto code = std::make_shared<const SurfaceCode>(5);
    MwpmDecoder a(code), b(code);
    for (std::uint64_t s = 0; s < 4096; s += 7) {
        auto x = a.decode(syndrome_bits(s, 12));
        a.decode(syndrome_bits(4095 - s, 12));
        EXPECT_EQ(x.correction, b.decode(syndrome_bits(s, 12)).correction);
    }
}
