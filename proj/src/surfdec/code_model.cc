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

#include <stdexcept>

#include "json.hpp"

namespace surfdec {

namespace {

bool is_z_plaquette(int row, int col) {
    return ((row + col) & 1) == 0;
}

// Enumerates the plaquettes of one type present on a distance-d patch, in
// row-major order of the upper-left corner.
template <typename Fn>
void for_each_plaquette(int d, bool z_type, Fn &&fn) {
    for (int r = -1; r < d; r++) {
        for (int c = -1; c < d; c++) {
            bool top_or_bottom = r == -1 || r == d - 1;
            bool left_or_right = c == -1 || c == d - 1;
            if (top_or_bottom && left_or_right) {
                continue;
            }
            if (is_z_plaquette(r, c) != z_type) {
                continue;
            }
            // Weight-2 Z plaquettes live on the top/bottom edges only, X on left/right.
            if (top_or_bottom && !z_type) {
                continue;
            }
            if (left_or_right && z_type) {
                continue;
            }
            Support support;
            for (int dr = 0; dr < 2; dr++) {
                for (int dc = 0; dc < 2; dc++) {
                    int rr = r + dr;
                    int cc = c + dc;
                    if (rr >= 0 && rr < d && cc >= 0 && cc < d) {
                        support.push_back(static_cast<std::uint32_t>(rr * d + cc));
                    }
                }
            }
            fn(PlaquetteCoord{r, c}, std::move(support));
        }
    }
}

}  // namespace

const char *residual_class_name(ResidualClass c) {
    switch (c) {
        case ResidualClass::Success:
            return "success";
        case ResidualClass::LogicalFailure:
            return "logical_failure";
        case ResidualClass::SyndromeNonzero:
            return "syndrome_nonzero";
    }
    return "unknown";
}

SurfaceCode::SurfaceCode(int distance) : distance_(distance) {
    if (distance < 3 || distance % 2 == 0) {
        throw std::invalid_argument(
            "surface code distance must be an odd integer >= 3, got " + std::to_string(distance));
    }
    num_data_ = static_cast<std::size_t>(distance) * static_cast<std::size_t>(distance);

    for_each_plaquette(distance, true, [&](PlaquetteCoord at, Support support) {
        check_coords_.push_back(at);
        z_checks_.push_back(std::move(support));
    });

    parity_matrix_ = BitMatrix(z_checks_.size(), num_data_);
    checks_of_qubit_.assign(num_data_, {});
    for (std::size_t k = 0; k < z_checks_.size(); k++) {
        for (auto q : z_checks_[k]) {
            parity_matrix_.set(k, q, true);
            checks_of_qubit_[q].push_back(static_cast<std::uint32_t>(k));
        }
    }

    for (int r = 0; r < distance; r++) {
        logical_z_support_.push_back(static_cast<std::uint32_t>(r * distance));
    }
    for (int c = 0; c < distance; c++) {
        logical_x_support_.push_back(static_cast<std::uint32_t>(c));
    }
    logical_z_mask_ = BitString::from_indices(logical_z_support_, num_data_);

    if (fits_word()) {
        for (const auto &check : z_checks_) {
            std::uint64_t w = 0;
            for (auto q : check) {
                w |= std::uint64_t{1} << q;
            }
            check_words_.push_back(w);
        }
        logical_z_word_ = logical_z_mask_.to_integer();
    }
}

DataCoord SurfaceCode::data_coord(std::size_t qubit) const {
    return DataCoord{static_cast<int>(qubit) / distance_, static_cast<int>(qubit) % distance_};
}

std::vector<Support> SurfaceCode::x_checks() const {
    std::vector<Support> out;
    for_each_plaquette(distance_, false, [&](PlaquetteCoord, Support support) {
        out.push_back(std::move(support));
    });
    return out;
}

std::vector<PlaquetteCoord> SurfaceCode::x_check_coords() const {
    std::vector<PlaquetteCoord> out;
    for_each_plaquette(distance_, false, [&](PlaquetteCoord at, Support) {
        out.push_back(at);
    });
    return out;
}

BitString SurfaceCode::syndrome_of(const BitString &error) const {
    if (error.size() != num_data_) {
        throw std::invalid_argument(
            "error pattern has " + std::to_string(error.size()) + " bits, code has " +
            std::to_string(num_data_) + " data qubits");
    }
    return parity_matrix_.multiply(error);
}

std::uint64_t SurfaceCode::syndrome_of(std::uint64_t error) const {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < check_words_.size(); k++) {
        s |= static_cast<std::uint64_t>(std::popcount(error & check_words_[k]) & 1) << k;
    }
    return s;
}

std::uint64_t SurfaceCode::error_mask() const {
    return num_data_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_data_) - 1;
}

ResidualClass SurfaceCode::classify_residual(const BitString &residual) const {
    if (syndrome_of(residual).any()) {
        return ResidualClass::SyndromeNonzero;
    }
    return residual.dot(logical_z_mask_) ? ResidualClass::LogicalFailure : ResidualClass::Success;
}

std::string SurfaceCode::to_json() const {
    nlohmann::ordered_json doc;
    doc["distance"] = distance_;
    doc["num_data"] = num_data_;
    doc["checks"] = z_checks_;
    doc["logical"] = logical_z_support_;
    doc["logical_x"] = logical_x_support_;
    auto data = nlohmann::ordered_json::array();
    for (std::size_t q = 0; q < num_data_; q++) {
        auto at = data_coord(q);
        data.push_back({at.row, at.col});
    }
    auto checks = nlohmann::ordered_json::array();
    auto boundary = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < z_checks_.size(); k++) {
        checks.push_back({check_coords_[k].row + 0.5, check_coords_[k].col + 0.5});
        boundary.push_back(is_boundary_check(k));
    }
    doc["coords"] = {{"data", data}, {"checks", checks}};
    doc["boundary_checks"] = boundary;
    return doc.dump(2) + "\n";
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    unsigned __int128 c = 1;
    for (unsigned i = 0; i < k; i++) {
        c = c * (n - i) / (i + 1);
    }
    return static_cast<std::uint64_t>(c);
}

}  // namespace surfdec
