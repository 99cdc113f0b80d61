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

#ifndef SURFDEC_BITS_H
#define SURFDEC_BITS_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfdec {

/// A fixed-length GF(2) vector packed into 64-bit words.
///
/// Bit i lives in word i / 64 at position i % 64, so for strings of at most
/// 64 bits the packed word equals the integer encoding with bit i = element i.
/// Padding bits past size() are kept zero.
class BitString {
   public:
    BitString() = default;
    explicit BitString(std::size_t num_bits);

    static BitString from_integer(std::uint64_t value, std::size_t num_bits);
    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitString from_string(std::string_view text);
    static BitString from_indices(std::span<const std::uint32_t> indices, std::size_t num_bits);

    std::size_t size() const {
        return num_bits_;
    }
    bool get(std::size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    bool operator[](std::size_t index) const {
        return get(index);
    }
    void set(std::size_t index, bool value);
    void flip(std::size_t index) {
        words_[index >> 6] ^= std::uint64_t{1} << (index & 63);
    }
    void clear();

    bool any() const;
    std::size_t popcount() const;
    /// Parity of the overlap with another string of equal length.
    bool dot(const BitString &other) const;
    /// Integer encoding. Requires size() <= 64.
    std::uint64_t to_integer() const;
    std::string to_string() const;
    std::vector<std::uint32_t> ones() const;

    std::span<const std::uint64_t> words() const {
        return words_;
    }
    std::span<std::uint64_t> words() {
        return words_;
    }

    BitString &operator^=(const BitString &other);
    friend BitString operator^(BitString lhs, const BitString &rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const BitString &other) const = default;

   private:
    std::size_t num_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Hamming weight.
inline std::size_t weight(const BitString &bits) {
    return bits.popcount();
}
inline std::size_t weight(std::uint64_t bits) {
    return static_cast<std::size_t>(std::popcount(bits));
}

/// Dense GF(2) matrix stored as packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t num_rows, std::size_t num_cols);

    std::size_t num_rows() const {
        return rows_.size();
    }
    std::size_t num_cols() const {
        return num_cols_;
    }
    const BitString &row(std::size_t r) const {
        return rows_[r];
    }
    BitString &row(std::size_t r) {
        return rows_[r];
    }
    bool get(std::size_t r, std::size_t c) const {
        return rows_[r].get(c);
    }
    void set(std::size_t r, std::size_t c, bool value) {
        rows_[r].set(c, value);
    }

    /// Matrix-vector product over GF(2).
    BitString multiply(const BitString &vec) const;
    BitString column(std::size_t c) const;
    std::size_t rank() const;

   private:
    std::size_t num_cols_ = 0;
    std::vector<BitString> rows_;
};

}  // namespace surfdec

#endif
