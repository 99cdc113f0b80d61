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

#include "surfdec/code_model.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "json.hpp"

#include "oracles.h"

using namespace surfdec;

namespace {

std::vector<std::vector<int>> dense(const BitMatrix &m) {
    std::vector<std::vector<int>> out(m.num_rows(), std::vector<int>(m.num_cols()));
    for (std::size_t r = 0; r < m.num_rows(); r++) {
        for (std::size_t c = 0; c < m.num_cols(); c++) {
            out[r][c] = m.get(r, c);
        }
    }
    return out;
}

BitString indicator(const Support &support, std::size_t n) {
    return BitString::from_indices(support, n);
}

}  // namespace

TEST(code_model, sizes) {
    SurfaceCode d3(3);
    EXPECT_EQ(d3.num_data(), 9u);
    EXPECT_EQ(d3.num_checks(), 4u);
    EXPECT_EQ(d3.logical_z_support().size(), 3u);

    SurfaceCode d5(5);
    EXPECT_EQ(d5.num_data(), 25u);
    EXPECT_EQ(d5.num_checks(), 12u);

    SurfaceCode d7(7);
    EXPECT_EQ(d7.num_checks(), 24u);
}

TEST(code_model, rejects_bad_distance) {
    EXPECT_THROW(SurfaceCode(4), std::invalid_argument);
    EXPECT_THROW(SurfaceCode(1), std::invalid_argument);
    EXPECT_THROW(SurfaceCode(-3), std::invalid_argument);
}

TEST(code_model, structure) {
    for (int d : {3, 5, 7, 9}) {
        SurfaceCode code(d);
        std::size_t boundary = 0;
        std::vector<int> touches(code.num_data(), 0);
        for (std::size_t k = 0; k < code.num_checks(); k++) {
            auto &s = code.z_checks()[k];
            ASSERT_TRUE(s.size() == 2 || s.size() == 4);
            boundary += code.is_boundary_check(k);
            for (auto q : s) {
                touches[q]++;
            }
        }
        EXPECT_EQ(boundary, static_cast<std::size_t>(d - 1));
        for (auto t : touches) {
            EXPECT_TRUE(t == 1 || t == 2);
        }
        EXPECT_EQ(oracle::gf2_rank(dense(code.parity_matrix())), static_cast<int>(code.num_checks()));
        // The X logical has zero syndrome; the Z logical commutes with the
        // X-type generators.
        EXPECT_FALSE(code.syndrome_of(indicator(code.logical_x_support(), code.num_data())).any());
        auto z = indicator(code.logical_z_support(), code.num_data());
        for (auto &g : code.x_checks()) {
            EXPECT_FALSE(indicator(g, code.num_data()).dot(z));
        }
        EXPECT_EQ(code.x_checks().size(), code.num_checks());
    }
}

TEST(code_model, deterministic_construction) {
    SurfaceCode a(5), b(5);
    EXPECT_EQ(a.z_checks(), b.z_checks());
    EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(code_model, syndrome_matches_oracle_and_is_linear) {
    std::mt19937_64 rng(11);
    for (int d : {3, 5, 7}) {
        SurfaceCode code(d);
        auto mask = code.error_mask();
        for (int trial = 0; trial < 200; trial++) {
            std::uint64_t e1 = rng() & mask, e2 = rng() & mask;
            auto s1 = code.syndrome_of(e1);
            EXPECT_EQ(s1, oracle::syndrome(code.z_checks(), e1));
            EXPECT_EQ(code.syndrome_of(e1 ^ e2), s1 ^ code.syndrome_of(e2));
            auto bits = code.syndrome_of(BitString::from_integer(e1, code.num_data()));
            EXPECT_EQ(bits.to_integer(), s1);
        }
    }
}

TEST(code_model, trivial_syndromes) {
    SurfaceCode code(5);
    EXPECT_FALSE(code.syndrome_of(BitString(25)).any());
    EXPECT_EQ(code.syndrome_of(code.error_mask()), 0u);
    EXPECT_THROW(code.syndrome_of(BitString(24)), std::invalid_argument);
}

TEST(code_model, two_qubit_row_error_flips_four_checks) {
    SurfaceCode code(5);
    // Two data qubits on the third row, separated by one.
    auto e = BitString::from_indices(std::vector<std::uint32_t>{2 * 5 + 1, 2 * 5 + 3}, 25);
    EXPECT_EQ(weight(e), 2u);
    auto s = code.syndrome_of(e);
    EXPECT_EQ(s.popcount(), 4u);
    // The complementary three qubits of the row give the same syndrome.
    auto rest = BitString::from_indices(std::vector<std::uint32_t>{10, 12, 14}, 25);
    EXPECT_EQ(code.syndrome_of(rest), s);
    EXPECT_EQ(code.classify_residual(e ^ rest), ResidualClass::LogicalFailure);
}

TEST(code_model, classify_residual) {
    SurfaceCode code(3);
    EXPECT_EQ(code.classify_residual(BitString(9)), ResidualClass::Success);
    EXPECT_EQ(
        code.classify_residual(indicator(code.logical_x_support(), 9)), ResidualClass::LogicalFailure);
    EXPECT_EQ(code.classify_residual(BitString::from_integer(1, 9)), ResidualClass::SyndromeNonzero);
    EXPECT_THROW(code.classify_residual(BitString(8)), std::invalid_argument);
}

TEST(code_model, stabilizer_group_is_trivial) {
    SurfaceCode code(3);
    auto gens = code.x_checks();
    ASSERT_EQ(gens.size(), 4u);
    std::set<std::uint64_t> group;
    for (unsigned mask = 0; mask < (1u << gens.size()); mask++) {
        BitString g(9);
        for (std::size_t i = 0; i < gens.size(); i++) {
            if ((mask >> i) & 1) {
                g ^= indicator(gens[i], 9);
            }
        }
        group.insert(g.to_integer());
        EXPECT_FALSE(code.syndrome_of(g).any());
        EXPECT_EQ(code.classify_residual(g), ResidualClass::Success);
    }
    EXPECT_EQ(group.size(), 16u);
}

TEST(code_model, weight_classes) {
    SurfaceCode code(3);
    std::vector<std::uint64_t> counts(10, 0);
    for (std::uint64_t e = 0; e < 512; e++) {
        counts[weight(e)]++;
    }
    for (unsigned w = 0; w <= 9; w++) {
        EXPECT_EQ(counts[w], binomial(9, w));
    }
    EXPECT_EQ(binomial(25, 12), 5200300u);
    EXPECT_EQ(binomial(64, 32), 1832624140942590534ull);
}

TEST(code_model, json_export) {
    SurfaceCode code(3);
    auto doc = nlohmann::json::parse(code.to_json());
    EXPECT_EQ(doc["distance"], 3);
    EXPECT_EQ(doc["checks"].size(), 4u);
    EXPECT_EQ(doc["logical"].size(), 3u);
    EXPECT_TRUE(doc.contains("coords"));
}

TEST(code_model, checks_match_lattice_oracle) {
    for (int d : {3, 5, 7}) {
        SurfaceCode code(d);
        auto expected = oracle::rotated_z_checks(d);
        ASSERT_EQ(code.z_checks().size(), expected.size());
        for (std::size_t k = 0; k < expected.size(); k++) {
            auto got = code.z_checks()[k];
            std::sort(got.begin(), got.end());
            EXPECT_EQ(got, expected[k]) << "d = " << d << " check " << k;
        }
    }
}
