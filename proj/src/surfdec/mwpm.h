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

#ifndef SURFDEC_MWPM_H
#define SURFDEC_MWPM_H

#include <memory>
#include <vector>

#include "surfdec/blossom.h"
#include "surfdec/decoder.h"

namespace surfdec {

/// Shortest chains between Z-checks and to the code boundary.
///
/// Nodes are the Z-checks plus one boundary node. Each data qubit is an edge:
/// between its two checks, or from its single check to the boundary. Path
/// lengths count data qubits. Canonical chains come from a breadth-first
/// search that visits neighbours in ascending (node, qubit) order, so every
/// stored chain is deterministic.
class DetectionGraph {
   public:
    explicit DetectionGraph(const SurfaceCode &code);

    std::size_t num_checks() const {
        return num_checks_;
    }
    int check_distance(std::size_t a, std::size_t b) const {
        return distance_[a * num_checks_ + b];
    }
    int boundary_distance(std::size_t a) const {
        return boundary_distance_[a];
    }
    /// Data qubits on the canonical chain between two checks.
    const BitString &path(std::size_t a, std::size_t b) const {
        return paths_[a * num_checks_ + b];
    }
    const BitString &boundary_path(std::size_t a) const {
        return boundary_paths_[a];
    }

   private:
    std::size_t num_checks_;
    std::vector<int> distance_;
    std::vector<int> boundary_distance_;
    std::vector<BitString> paths_;
    std::vector<BitString> boundary_paths_;
};

/// Exact minimum-weight perfect matching decoder.
///
/// Defects are matched on a graph with one virtual boundary partner per
/// defect; virtual partners connect to each other at zero cost, so any
/// defect may terminate on the boundary.
class MwpmDecoder final : public Decoder {
   public:
    explicit MwpmDecoder(std::shared_ptr<const SurfaceCode> code);

    DecoderKind kind() const override {
        return DecoderKind::Mwpm;
    }
    const SurfaceCode &code() const override {
        return *code_;
    }
    const DetectionGraph &graph() const {
        return graph_;
    }
    void decode_into(const BitString &syndrome, DecodeOutcome &out) override;

    /// Total weight of the last matching found.
    std::int64_t last_matching_weight() const {
        return last_weight_;
    }

   private:
    std::shared_ptr<const SurfaceCode> code_;
    DetectionGraph graph_;
    BlossomMatcher matcher_;
    std::vector<std::uint32_t> defects_;
    std::vector<WeightedEdge> edges_;
    std::int64_t last_weight_ = 0;
};

}  // namespace surfdec

#endif
