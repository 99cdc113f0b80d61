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

#include "surfdec/lut.h"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "surfdec/errors.h"

namespace surfdec {

namespace {

constexpr std::uint8_t kUnset = 0xFF;

std::size_t record_bytes(int distance) {
    return (static_cast<std::size_t>(distance) * distance + 7) / 8;
}

}  // namespace

// Entries are filled one weight layer at a time. If e is the preferred
// weight-w error for syndrome s and q is its highest set bit, then e without
// q is the preferred weight-(w-1) error for s ^ H[:, q]: any smaller one
// would give a smaller weight-w error for s once q is added back. So the
// preferred entry is the minimum, over the previous layer's entries t and
// qubits q outside them, of entry(t) | q with t ^ H[:, q] = s.
LookupTable LookupTable::build(const SurfaceCode &code) {
    if (code.distance() > kMaxLutDistance) {
        throw std::invalid_argument(
            "look-up tables are limited to distance " + std::to_string(kMaxLutDistance));
    }
    const std::size_t n = code.num_data();
    const std::size_t num_syndromes = std::size_t{1} << code.num_checks();

    std::vector<std::uint64_t> column_syndrome(n);
    for (std::size_t q = 0; q < n; q++) {
        column_syndrome[q] = code.syndrome_of(std::uint64_t{1} << q);
    }

    std::vector<std::uint64_t> entries(num_syndromes, 0);
    std::vector<std::uint8_t> layer(num_syndromes, kUnset);
    layer[0] = 0;
    std::vector<std::uint64_t> frontier{0};
    std::vector<std::uint64_t> next;
    std::size_t filled = 1;
    for (std::uint8_t w = 1; filled < num_syndromes; w++) {
        if (frontier.empty()) {
            throw std::logic_error("syndrome map is not surjective");
        }
        next.clear();
        for (auto t : frontier) {
            const auto base = entries[t];
            for (std::size_t q = 0; q < n; q++) {
                auto bit = std::uint64_t{1} << q;
                if (base & bit) {
                    continue;
                }
                auto s = t ^ column_syndrome[q];
                auto candidate = base | bit;
                if (layer[s] == kUnset) {
                    layer[s] = w;
                    entries[s] = candidate;
                    next.push_back(s);
                    filled++;
                } else if (layer[s] == w && candidate < entries[s]) {
                    entries[s] = candidate;
                }
            }
        }
        std::swap(frontier, next);
    }
    return LookupTable(code.distance(), std::move(entries));
}

std::size_t LookupTable::max_entry_weight() const {
    std::size_t best = 0;
    for (auto e : entries_) {
        best = std::max(best, weight(e));
    }
    return best;
}

void LookupTable::save(const std::string &path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FileError(FileErrorKind::Io, "cannot open " + path + " for writing");
    }
    std::vector<char> buffer(kLutMagic.begin(), kLutMagic.end());
    auto put_u16 = [&](std::uint16_t v) {
        buffer.push_back(static_cast<char>(v & 0xFF));
        buffer.push_back(static_cast<char>(v >> 8));
    };
    put_u16(kLutFormatVersion);
    put_u16(static_cast<std::uint16_t>(distance_));
    const auto width = record_bytes(distance_);
    buffer.reserve(buffer.size() + width * entries_.size());
    for (auto e : entries_) {
        for (std::size_t b = 0; b < width; b++) {
            buffer.push_back(static_cast<char>((e >> (8 * b)) & 0xFF));
        }
    }
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    if (!out) {
        throw FileError(FileErrorKind::Io, "failed writing " + path);
    }
}

LookupTable LookupTable::load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError(FileErrorKind::Io, "cannot open " + path);
    }
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() < kLutMagic.size() + 4) {
        throw FileError(FileErrorKind::Truncated, path + ": file shorter than the table header");
    }
    if (!std::equal(kLutMagic.begin(), kLutMagic.end(), bytes.begin(), [](char a, unsigned char b) {
            return static_cast<unsigned char>(a) == b;
        })) {
        throw FileError(FileErrorKind::Format, path + ": not a look-up table file (bad magic)");
    }
    auto get_u16 = [&](std::size_t at) {
        return static_cast<std::uint16_t>(bytes[at] | (bytes[at + 1] << 8));
    };
    auto version = get_u16(8);
    if (version != kLutFormatVersion) {
        throw FileError(
            FileErrorKind::Version, path + ": unsupported table format version " + std::to_string(version));
    }
    int distance = get_u16(10);
    if (distance < 3 || distance % 2 == 0 || distance > kMaxLutDistance) {
        throw FileError(FileErrorKind::Format, path + ": invalid distance " + std::to_string(distance) + " in header");
    }
    SurfaceCode code(distance);
    const auto width = record_bytes(distance);
    const std::size_t count = std::size_t{1} << code.num_checks();
    const std::size_t body = bytes.size() - 12;
    if (body < width * count) {
        throw FileError(FileErrorKind::Truncated, path + ": table body is truncated");
    }
    if (body > width * count) {
        throw FileError(FileErrorKind::Format, path + ": trailing bytes after the table body");
    }
    std::vector<std::uint64_t> entries(count);
    const unsigned char *p = bytes.data() + 12;
    for (std::size_t s = 0; s < count; s++, p += width) {
        std::uint64_t e = 0;
        for (std::size_t b = 0; b < width; b++) {
            e |= static_cast<std::uint64_t>(p[b]) << (8 * b);
        }
        if ((e & ~code.error_mask()) != 0 || code.syndrome_of(e) != s) {
            throw FileError(FileErrorKind::Format, path + ": entry " + std::to_string(s) + " does not match its syndrome");
        }
        entries[s] = e;
    }
    return LookupTable(distance, std::move(entries));
}

LutDecoder::LutDecoder(std::shared_ptr<const LookupTable> table)
    : table_(std::move(table)), code_(std::make_shared<const SurfaceCode>(table_->distance())) {
}

void LutDecoder::decode_into(const BitString &syndrome, DecodeOutcome &out) {
    check_syndrome(syndrome);
    out.decoder = DecoderKind::Lut;
    out.converged = true;
    out.correction = BitString::from_integer(table_->entry(syndrome.to_integer()), code_->num_data());
}

}  // namespace surfdec
