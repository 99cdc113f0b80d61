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

#include "surfdec/bits.h"

#include <stdexcept>
#include <utility>

namespace surfdec {

BitString::BitString(std::size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

BitString BitString::from_integer(std::uint64_t value, std::size_t num_bits) {
    if (num_bits < 64 && (value >> num_bits) != 0) {
        throw std::invalid_argument("integer has bits set beyond the string length");
    }
    BitString result(num_bits);
    if (!result.words_.empty()) {
        result.words_[0] = value;
    }
    return result;
}

BitString BitString::from_string(std::string_view text) {
    BitString result(text.size());
    for (std::size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            result.flip(i);
        } else if (text[i] != '0') {
            throw std::invalid_argument("bit strings may only contain '0' and '1'");
        }
    }
    return result;
}

BitString BitString::from_indices(std::span<const std::uint32_t> indices, std::size_t num_bits) {
    BitString result(num_bits);
    for (auto i : indices) {
        if (i >= num_bits) {
            throw std::out_of_range("bit index out of range");
        }
        result.set(i, true);
    }
    return result;
}

void BitString::set(std::size_t index, bool value) {
    auto mask = std::uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

void BitString::clear() {
    for (auto &w : words_) {
        w = 0;
    }
}

bool BitString::any() const {
    for (auto w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

std::size_t BitString::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitString::dot(const BitString &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit string length mismatch");
    }
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::uint64_t BitString::to_integer() const {
    if (num_bits_ > 64) {
        throw std::out_of_range("bit string too long for a 64-bit integer");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BitString::to_string() const {
    std::string out(num_bits_, '0');
    for (std::size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

std::vector<std::uint32_t> BitString::ones() const {
    std::vector<std::uint32_t> out;
    for (std::size_t k = 0; k < words_.size(); k++) {
        auto w = words_[k];
        while (w) {
            out.push_back(static_cast<std::uint32_t>(k * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

BitString &BitString::operator^=(const BitString &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit string length mismatch");
    }
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitMatrix::BitMatrix(std::size_t num_rows, std::size_t num_cols)
    : num_cols_(num_cols), rows_(num_rows, BitString(num_cols)) {
}

BitString BitMatrix::multiply(const BitString &vec) const {
    if (vec.size() != num_cols_) {
        throw std::invalid_argument("vector length does not match matrix column count");
    }
    BitString out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r].dot(vec)) {
            out.flip(r);
        }
    }
    return out;
}

BitString BitMatrix::column(std::size_t c) const {
    BitString out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r].get(c)) {
            out.flip(r);
        }
    }
    return out;
}

std::size_t BitMatrix::rank() const {
    auto work = rows_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < num_cols_ && rank < work.size(); c++) {
        std::size_t pivot = rank;
        while (pivot < work.size() && !work[pivot].get(c)) {
            pivot++;
        }
        if (pivot == work.size()) {
            continue;
        }
        std::swap(work[pivot], work[rank]);
        for (std::size_t r = 0; r < work.size(); r++) {
            if (r != rank && work[r].get(c)) {
                work[r] ^= work[rank];
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace surfdec
