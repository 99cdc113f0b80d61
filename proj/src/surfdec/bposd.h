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

#ifndef SURFDEC_BPOSD_H
#define SURFDEC_BPOSD_H

#include <memory>
#include <vector>

#include "surfdec/decoder.h"

namespace surfdec {

/// Message clamp for log-likelihood ratios.
inline constexpr double kLlrClamp = 30.0;

/// Check/variable adjacency of the parity matrix with per-edge storage slots.
///
/// Edges are numbered check-major: all edges of check 0 first, each check's
/// variables ascending.
class TannerGraph {
   public:
    TannerGraph(const BitMatrix &parity, double error_probability);

    std::size_t num_checks() const {
        return check_offsets_.size() - 1;
    }
    std::size_t num_variables() const {
        return var_edges_.size();
    }
    std::size_t num_edges() const {
        return edge_var_.size();
    }
    double prior_llr() const {
        return prior_llr_;
    }
    const BitMatrix &parity() const {
        return parity_;
    }

    std::size_t check_begin(std::size_t c) const {
        return check_offsets_[c];
    }
    std::size_t check_end(std::size_t c) const {
        return check_offsets_[c + 1];
    }
    std::uint32_t edge_variable(std::size_t e) const {
        return edge_var_[e];
    }
    /// Edge ids incident to a variable, in ascending check order.
    const std::vector<std::uint32_t> &variable_edges(std::size_t v) const {
        return var_edges_[v];
    }

   private:
    BitMatrix parity_;
    double prior_llr_;
    std::vector<std::size_t> check_offsets_;
    std::vector<std::uint32_t> edge_var_;
    std::vector<std::vector<std::uint32_t>> var_edges_;
};

struct BpResult {
    BitString hard_decision;
    bool converged = false;
    int iterations = 0;
    /// Posterior probability that each data qubit carries an error.
    std::vector<double> error_probability;
};

/// Sum-product belief propagation, flooding schedule, log domain.
class BeliefPropagation {
   public:
    explicit BeliefPropagation(const TannerGraph &graph);

    /// Stops as soon as the hard decision reproduces the syndrome; the check
    /// happens once before the first iteration and after every iteration.
    void run(const BitString &syndrome, int max_iterations, BpResult &out);

   private:
    const TannerGraph &graph_;
    std::vector<double> var_to_check_;
    std::vector<double> check_to_var_;
    std::vector<double> posterior_;
    std::vector<double> tanh_half_;
};

/// Order-0 ordered statistics decoding.
///
/// Columns are ranked by descending error probability (ties by ascending
/// index); the first rank(H) independent columns form the information set and
/// the unique solution supported on it is returned.
class OsdSolver {
   public:
    explicit OsdSolver(const BitMatrix &parity);

    void solve(const BitString &syndrome, const std::vector<double> &error_probability, BitString &out);

   private:
    const BitMatrix &parity_;
    std::vector<std::uint32_t> order_;
    std::vector<BitString> columns_;
    // Augmented rows: permuted columns followed by the syndrome bit.
    std::vector<BitString> rows_;
    std::vector<std::uint32_t> pivot_col_;
};

class BposdDecoder final : public Decoder {
   public:
    BposdDecoder(std::shared_ptr<const SurfaceCode> code, const DecoderConfig &config);
    BposdDecoder(const BposdDecoder &) = delete;
    BposdDecoder &operator=(const BposdDecoder &) = delete;

    DecoderKind kind() const override {
        return DecoderKind::Bposd;
    }
    const SurfaceCode &code() const override {
        return *code_;
    }
    const TannerGraph &graph() const {
        return graph_;
    }
    void decode_into(const BitString &syndrome, DecodeOutcome &out) override;

    /// BP stage of the last decode, for inspection.
    const BpResult &last_bp() const {
        return bp_result_;
    }
    BeliefPropagation &bp() {
        return bp_;
    }
    OsdSolver &osd() {
        return osd_;
    }

   private:
    std::shared_ptr<const SurfaceCode> code_;
    DecoderConfig config_;
    TannerGraph graph_;
    BeliefPropagation bp_;
    OsdSolver osd_;
    BpResult bp_result_;
};

}  // namespace surfdec

#endif
