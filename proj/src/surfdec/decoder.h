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

#ifndef SURFDEC_DECODER_H
#define SURFDEC_DECODER_H

#include <functional>
#include <memory>
#include <string>

#include "surfdec/bits.h"
#include "surfdec/code_model.h"

namespace surfdec {

enum class DecoderKind { Mwpm, Bposd, Lut };

const char *decoder_name(DecoderKind kind);
/// Accepts "mwpm", "bposd", "lut". Throws std::invalid_argument otherwise.
DecoderKind parse_decoder_kind(const std::string &name);

struct DecoderConfig {
    double error_probability = 0.1;
    int bp_max_iterations = 32;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct DecodeOutcome {
    BitString correction;
    /// BP convergence for BPOSD; always true for MWPM and LUT.
    bool converged = true;
    DecoderKind decoder = DecoderKind::Mwpm;
};

/// A syndrome -> correction map over a fixed code.
///
/// Implementations precompute everything reusable at construction and keep a
/// private workspace, so an instance must not be shared between threads.
/// decode() is a pure function of the syndrome.
class Decoder {
   public:
    virtual ~Decoder() = default;

    virtual DecoderKind kind() const = 0;
    virtual const SurfaceCode &code() const = 0;

    /// Throws std::invalid_argument on a syndrome length mismatch.
    DecodeOutcome decode(const BitString &syndrome) {
        DecodeOutcome out;
        decode_into(syndrome, out);
        return out;
    }
    /// Reuses out.correction's storage.
    virtual void decode_into(const BitString &syndrome, DecodeOutcome &out) = 0;

   protected:
    void check_syndrome(const BitString &syndrome) const;
};

using DecoderFactory = std::function<std::unique_ptr<Decoder>()>;

class LookupTable;

std::unique_ptr<Decoder> make_decoder(
    DecoderKind kind, std::shared_ptr<const SurfaceCode> code, const DecoderConfig &config);
std::unique_ptr<Decoder> make_lut_decoder(std::shared_ptr<const LookupTable> table);

/// A factory producing fresh instances sharing the same immutable inputs.
/// For DecoderKind::Lut the table is built once, when the factory is made.
DecoderFactory decoder_factory(
    DecoderKind kind, std::shared_ptr<const SurfaceCode> code, const DecoderConfig &config);

}  // namespace surfdec

#endif
