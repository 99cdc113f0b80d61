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

#include "surfdec/mwpm.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace surfdec {

DetectionGraph::DetectionGraph(const SurfaceCode &code) : num_checks_(code.num_checks()) {
    const std::size_t m = num_checks_;
    const std::size_t boundary = m;
    const std::size_t n = code.num_data();

    // adjacency[node] = sorted (neighbour, qubit) pairs.
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> adjacency(m + 1);
    for (std::uint32_t q = 0; q < n; q++) {
        const auto &touching = code.checks_of_qubit()[q];
        if (touching.size() == 2) {
            adjacency[touching[0]].push_back({touching[1], q});
            adjacency[touching[1]].push_back({touching[0], q});
        } else if (touching.size() == 1) {
            adjacency[touching[0]].push_back({boundary, q});
            adjacency[boundary].push_back({touching[0], q});
        } else {
            throw std::logic_error("data qubit not covered by one or two Z-checks");
        }
    }
    for (auto &row : adjacency) {
        std::sort(row.begin(), row.end());
    }

    distance_.assign(m * m, -1);
    boundary_distance_.assign(m, -1);
    paths_.assign(m * m, BitString(n));
    boundary_paths_.assign(m, BitString(n));

    std::vector<int> dist(m + 1);
    std::vector<std::pair<std::size_t, std::uint32_t>> parent(m + 1);
    for (std::size_t source = 0; source < m; source++) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[source] = 0;
        std::deque<std::size_t> frontier{source};
        while (!frontier.empty()) {
            auto node = frontier.front();
            frontier.pop_front();
            if (node == boundary) {
                continue;
            }
            for (auto [next, qubit] : adjacency[node]) {
                if (dist[next] == -1) {
                    dist[next] = dist[node] + 1;
                    parent[next] = {node, qubit};
                    frontier.push_back(next);
                }
            }
        }
        auto trace = [&](std::size_t target, BitString &out) {
            for (auto node = target; node != source; node = parent[node].first) {
                out.flip(parent[node].second);
            }
        };
        for (std::size_t target = 0; target < m; target++) {
            if (dist[target] < 0) {
                throw std::logic_error("detection graph is disconnected");
            }
            distance_[source * m + target] = dist[target];
            trace(target, paths_[source * m + target]);
        }
        boundary_distance_[source] = dist[boundary];
        trace(boundary, boundary_paths_[source]);
    }
}

MwpmDecoder::MwpmDecoder(std::shared_ptr<const SurfaceCode> code)
    : code_(std::move(code)), graph_(*code_) {
}

void MwpmDecoder::decode_into(const BitString &syndrome, DecodeOutcome &out) {
    check_syndrome(syndrome);
    out.decoder = DecoderKind::Mwpm;
    out.converged = true;
    if (out.correction.size() != code_->num_data()) {
        out.correction = BitString(code_->num_data());
    } else {
        out.correction.clear();
    }
    last_weight_ = 0;

    defects_ = syndrome.ones();
    const int k = static_cast<int>(defects_.size());
    if (k == 0) {
        return;
    }

    // Maximum-weight form: w' = top - w, solved for maximum cardinality.
    std::int64_t top = 1;
    for (int i = 0; i < k; i++) {
        top = std::max<std::int64_t>(top, graph_.boundary_distance(defects_[i]) + 1);
        for (int j = i + 1; j < k; j++) {
            top = std::max<std::int64_t>(top, graph_.check_distance(defects_[i], defects_[j]) + 1);
        }
    }
    edges_.clear();
    for (int i = 0; i < k; i++) {
        int bi = graph_.boundary_distance(defects_[i]);
        for (int j = i + 1; j < k; j++) {
            int dij = graph_.check_distance(defects_[i], defects_[j]);
            // A pair that costs more than sending both defects to the
            // boundary can never be in an optimal matching.
            if (dij <= bi + graph_.boundary_distance(defects_[j])) {
                edges_.push_back({i, j, top - dij});
            }
        }
        edges_.push_back({i, k + i, top - bi});
    }
    for (int i = 0; i < k; i++) {
        for (int j = i + 1; j < k; j++) {
            edges_.push_back({k + i, k + j, top});
        }
    }

    const auto &mate = matcher_.solve(2 * k, edges_, true);
    for (int i = 0; i < k; i++) {
        int partner = mate[i];
        if (partner < 0) {
            throw std::logic_error("matching left a defect unpaired");
        }
        if (partner >= k) {
            out.correction ^= graph_.boundary_path(defects_[i]);
            last_weight_ += graph_.boundary_distance(defects_[i]);
        } else if (partner > i) {
            out.correction ^= graph_.path(defects_[i], defects_[partner]);
            last_weight_ += graph_.check_distance(defects_[i], defects_[partner]);
        }
    }
}

}  // namespace surfdec
