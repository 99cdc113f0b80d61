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

#include <stdexcept>

#include "surfdec/bposd.h"
#include "surfdec/lut.h"
#include "surfdec/mwpm.h"

namespace surfdec {

const char *decoder_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::Mwpm:
            return "mwpm";
        case DecoderKind::Bposd:
            return "bposd";
        case DecoderKind::Lut:
            return "lut";
    }
    return "unknown";
}

DecoderKind parse_decoder_kind(const std::string &name) {
    if (name == "mwpm") {
        return DecoderKind::Mwpm;
    }
    if (name == "bposd") {
        return DecoderKind::Bposd;
    }
    if (name == "lut") {
        return DecoderKind::Lut;
    }
    throw std::invalid_argument("unknown decoder '" + name + "' (expected mwpm, bposd or lut)");
}

void DecoderConfig::validate() const {
    if (!(error_probability > 0.0 && error_probability < 1.0)) {
        throw std::invalid_argument("error probability must lie strictly inside (0, 1)");
    }
    if (bp_max_iterations < 1) {
        throw std::invalid_argument("BP iteration cap must be a positive integer");
    }
}

void Decoder::check_syndrome(const BitString &syndrome) const {
    if (syndrome.size() != code().num_checks()) {
        throw std::invalid_argument(
            "syndrome has " + std::to_string(syndrome.size()) + " bits, code has " +
            std::to_string(code().num_checks()) + " checks");
    }
}

std::unique_ptr<Decoder> make_decoder(
    DecoderKind kind, std::shared_ptr<const SurfaceCode> code, const DecoderConfig &config) {
    config.validate();
    switch (kind) {
        case DecoderKind::Mwpm:
            return std::make_unique<MwpmDecoder>(std::move(code));
        case DecoderKind::Bposd:
            return std::make_unique<BposdDecoder>(std::move(code), config);
        case DecoderKind::Lut:
            return make_lut_decoder(std::make_shared<const LookupTable>(LookupTable::build(*code)));
    }
    throw std::invalid_argument("unknown decoder kind");
}

std::unique_ptr<Decoder> make_lut_decoder(std::shared_ptr<const LookupTable> table) {
    return std::make_unique<LutDecoder>(std::move(table));
}

DecoderFactory decoder_factory(
    DecoderKind kind, std::shared_ptr<const SurfaceCode> code, const DecoderConfig &config) {
    config.validate();
    if (kind == DecoderKind::Lut) {
        auto table = std::make_shared<const LookupTable>(LookupTable::build(*code));
        return [table]() {
            return make_lut_decoder(table);
        };
    }
    return [kind, code, config]() {
        return make_decoder(kind, code, config);
    };
}

}  // namespace surfdec
