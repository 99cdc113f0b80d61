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

#ifndef SURFDEC_CODE_MODEL_H
#define SURFDEC_CODE_MODEL_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "surfdec/bits.h"

namespace surfdec {

using Support = std::vector<std::uint32_t>;

/// Position of a data qubit on the integer lattice.
struct DataCoord {
    int row;
    int col;
};

/// Plaquette position, given by the data qubit at its upper-left corner.
/// The plaquette centre sits at (row + 0.5, col + 0.5); row or col may be -1
/// for boundary plaquettes.
struct PlaquetteCoord {
    int row;
    int col;
};

enum class ResidualClass { Success, LogicalFailure, SyndromeNonzero };

const char *residual_class_name(ResidualClass c);

/// The bit-flip half of a distance-d rotated surface code.
///
/// Data qubit (r, c) has index r * d + c. A plaquette with upper-left corner
/// (r, c) is Z-type when r + c is even. Weight-2 Z plaquettes sit on the
/// top and bottom edges; weight-2 X plaquettes on the left and right edges.
/// Checks are indexed in row-major order of their plaquette position, and
/// syndrome bit i is check i.
///
/// With this layout a full row of X flips commutes with every Z-check (it is
/// the X logical), and a full column is the Z logical. A residual X error
/// with zero syndrome is a logical failure exactly when it overlaps the Z
/// logical column an odd number of times.
class SurfaceCode {
   public:
    /// Throws std::invalid_argument unless distance is odd and >= 3.
    explicit SurfaceCode(int distance);

    int distance() const {
        return distance_;
    }
    std::size_t num_data() const {
        return num_data_;
    }
    std::size_t num_checks() const {
        return z_checks_.size();
    }

    const std::vector<Support> &z_checks() const {
        return z_checks_;
    }
    const BitMatrix &parity_matrix() const {
        return parity_matrix_;
    }
    /// Z-checks touching each data qubit (one or two entries).
    const std::vector<Support> &checks_of_qubit() const {
        return checks_of_qubit_;
    }
    /// Column 0. Commutes with every X-check.
    const Support &logical_z_support() const {
        return logical_z_support_;
    }
    /// Row 0. Has zero Z-syndrome.
    const Support &logical_x_support() const {
        return logical_x_support_;
    }
    const BitString &logical_z_mask() const {
        return logical_z_mask_;
    }

    DataCoord data_coord(std::size_t qubit) const;
    PlaquetteCoord check_coord(std::size_t check) const {
        return check_coords_[check];
    }
    bool is_boundary_check(std::size_t check) const {
        return z_checks_[check].size() == 2;
    }

    /// X-type stabilizer generators, built on demand.
    std::vector<Support> x_checks() const;
    std::vector<PlaquetteCoord> x_check_coords() const;

    BitString syndrome_of(const BitString &error) const;
    ResidualClass classify_residual(const BitString &residual) const;

    /// Word-level fast path, valid only when num_data() <= 64.
    bool fits_word() const {
        return num_data_ <= 64;
    }
    std::uint64_t syndrome_of(std::uint64_t error) const;
    bool logical_flip(std::uint64_t residual) const {
        return std::popcount(residual & logical_z_word_) & 1;
    }
    std::uint64_t error_mask() const;

    /// {distance, checks, logical, coords} as a JSON document.
    std::string to_json() const;

   private:
    int distance_;
    std::size_t num_data_;
    std::vector<Support> z_checks_;
    std::vector<PlaquetteCoord> check_coords_;
    std::vector<Support> checks_of_qubit_;
    BitMatrix parity_matrix_;
    Support logical_z_support_;
    Support logical_x_support_;
    BitString logical_z_mask_;
    std::vector<std::uint64_t> check_words_;
    std::uint64_t logical_z_word_ = 0;
};

/// C(n, k) as an exact 64-bit count; n <= 64.
std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace surfdec

#endif
