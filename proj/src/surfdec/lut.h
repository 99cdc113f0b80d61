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

#ifndef SURFDEC_LUT_H
#define SURFDEC_LUT_H

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "surfdec/decoder.h"

namespace surfdec {

/// Largest distance whose table is materialized (2^24 entries).
inline constexpr int kMaxLutDistance = 7;

inline constexpr std::array<char, 8> kLutMagic = {'S', 'U', 'R', 'F', 'D', 'L', 'U', 'T'};
inline constexpr std::uint16_t kLutFormatVersion = 1;

/// Dense syndrome -> minimum-weight correction table.
///
/// entries()[s] is the error of least weight with syndrome s; among equal
/// weights, the one with the smallest integer encoding. This is the entry
/// that a scan over all errors in order of (weight, integer value) would
/// record first.
class LookupTable {
   public:
    /// Throws std::invalid_argument when the distance exceeds kMaxLutDistance.
    static LookupTable build(const SurfaceCode &code);

    /// On-disk layout: magic, u16 version, u16 distance (little-endian), then
    /// one ceil(d^2 / 8)-byte little-endian record per syndrome.
    void save(const std::string &path) const;
    /// Throws FileError with kind Io, Format, Truncated or Version.
    static LookupTable load(const std::string &path);

    int distance() const {
        return distance_;
    }
    std::size_t num_data() const {
        return static_cast<std::size_t>(distance_) * distance_;
    }
    std::size_t num_entries() const {
        return entries_.size();
    }
    std::uint64_t entry(std::uint64_t syndrome) const {
        return entries_[syndrome];
    }
    const std::vector<std::uint64_t> &entries() const {
        return entries_;
    }
    std::size_t max_entry_weight() const;

    bool operator==(const LookupTable &other) const = default;

   private:
    LookupTable(int distance, std::vector<std::uint64_t> entries)
        : distance_(distance), entries_(std::move(entries)) {
    }

    int distance_ = 0;
    std::vector<std::uint64_t> entries_;
};

class LutDecoder final : public Decoder {
   public:
    explicit LutDecoder(std::shared_ptr<const LookupTable> table);

    DecoderKind kind() const override {
        return DecoderKind::Lut;
    }
    const SurfaceCode &code() const override {
        return *code_;
    }
    void decode_into(const BitString &syndrome, DecodeOutcome &out) override;

   private:
    std::shared_ptr<const LookupTable> table_;
    std::shared_ptr<const SurfaceCode> code_;
};

}  // namespace surfdec

#endif
