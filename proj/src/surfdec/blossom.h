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

#ifndef SURFDEC_BLOSSOM_H
#define SURFDEC_BLOSSOM_H

#include <cstdint>
#include <vector>

namespace surfdec {

struct WeightedEdge {
    int u;
    int v;
    std::int64_t weight;
};

/// Maximum-weight matching on a general graph with integer weights.
///
/// Edmonds' blossom algorithm in the O(n^3) primal-dual formulation of
/// Galil, with blossom expansion/augmentation tracked through nested
/// sub-blossom lists. The result depends only on the vertex count and the
/// edge list order. Buffers are kept between calls.
class BlossomMatcher {
   public:
    /// Returns mate[v] (or -1). With max_cardinality set, the result is the
    /// heaviest among the maximum-cardinality matchings.
    const std::vector<int> &solve(int num_vertices, const std::vector<WeightedEdge> &edges, bool max_cardinality);

   private:
    std::int64_t slack(int k) const;
    void blossom_leaves(int b, std::vector<int> &out) const;
    void assign_label(int w, int t, int p);
    int scan_blossom(int v, int w);
    void add_blossom(int base, int k);
    void expand_blossom(int b, bool endstage);
    void augment_blossom(int b, int v);
    void augment_matching(int k);

    int n_ = 0;
    const std::vector<WeightedEdge> *edges_ = nullptr;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<int> unusedblossoms_;
    std::vector<std::int64_t> dualvar_;
    std::vector<bool> allowedge_;
    std::vector<int> queue_;
    std::vector<int> leaves_;
    std::vector<int> result_;
};

/// Minimum-weight perfect matching. Throws std::runtime_error if the graph
/// has no perfect matching. Returns mate[v].
std::vector<int> min_weight_perfect_matching(
    BlossomMatcher &matcher, int num_vertices, const std::vector<WeightedEdge> &edges);

}  // namespace surfdec

#endif
