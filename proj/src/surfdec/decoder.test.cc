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

#include "surfdec/decoder.h"

#include <gtest/gtest.h>

#include "surfdec/lut.h"

using namespace surfdec;

namespace {

constexpr DecoderKind kAll[] = {DecoderKind::Mwpm, DecoderKind::Bposd, DecoderKind::Lut};

}  // namespace

TEST(decoder, names_round_trip) {
    for (auto k : kAll) {
        EXPECT_EQ(parse_decoder_kind(decoder_name(k)), k);
    }
    EXPECT_THROW(parse_decoder_kind("unionfind"), std::invalid_argument);
}

TEST(decoder, config_validation) {
    DecoderConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    for (double p : {0.0, 1.0, -0.1, 1.5}) {
        cfg.error_probability = p;
        EXPECT_THROW(cfg.validate(), std::invalid_argument);
    }
    cfg.error_probability = 0.1;
    cfg.bp_max_iterations = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(decoder, zero_syndrome_gives_zero_correction) {
    auto code = std::make_shared<const SurfaceCode>(5);
    for (auto k : kAll) {
        auto dec = make_decoder(k, code, {});
        EXPECT_EQ(dec->kind(), k);
        auto out = dec->decode(BitString(12));
        EXPECT_FALSE(out.correction.any());
        EXPECT_EQ(out.correction.size(), 25u);
        EXPECT_TRUE(out.converged);
        EXPECT_THROW(dec->decode(BitString(13)), std::invalid_argument);
    }
}

TEST(decoder, weight_one_errors_d3) {
    auto code = std::make_shared<const SurfaceCode>(3);
    for (auto k : kAll) {
        auto dec = make_decoder(k, code, {});
        for (std::uint32_t q = 0; q < 9; q++) {
            auto e = BitString::from_integer(std::uint64_t{1} << q, 9);
            auto out = dec->decode(code->syndrome_of(e));
            EXPECT_EQ(code->classify_residual(e ^ out.correction), ResidualClass::Success)
                << decoder_name(k) << " qubit " << q;
        }
    }
}

TEST(decoder, syndrome_consistency_sweep) {
    for (int d : {3, 5}) {
        auto code = std::make_shared<const SurfaceCode>(d);
        const auto m = code->num_checks();
        for (auto k : kAll) {
            auto dec = make_decoder(k, code, {});
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); s++) {
                auto syn = BitString::from_integer(s, m);
                ASSERT_EQ(code->syndrome_of(dec->decode(syn).correction), syn)
                    << decoder_name(k) << " d=" << d << " s=" << s;
            }
        }
    }
}

TEST(decoder, factories_produce_independent_equal_instances) {
    auto code = std::make_shared<const SurfaceCode>(3);
    for (auto k : kAll) {
        auto factory = decoder_factory(k, code, {});
        auto a = factory();
        auto b = factory();
        EXPECT_NE(a.get(), b.get());
        for (std::uint64_t s = 0; s < 16; s++) {
            auto syn = BitString::from_integer(s, 4);
            EXPECT_EQ(a->decode(syn).correction, b->decode(syn).correction);
        }
    }
}

TEST(decoder, lut_from_table) {
    auto table = std::make_shared<const LookupTable>(LookupTable::build(SurfaceCode(3)));
    auto dec = make_lut_decoder(table);
    EXPECT_EQ(dec->kind(), DecoderKind::Lut);
    EXPECT_EQ(dec->code().distance(), 3);
}
