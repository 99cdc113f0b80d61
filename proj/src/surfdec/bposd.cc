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

#include "surfdec/bposd.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace surfdec {

namespace {

double clamp_llr(double x) {
    return std::clamp(x, -kLlrClamp, kLlrClamp);
}

DecoderConfig validated(const DecoderConfig &config) {
    config.validate();
    return config;
}

}  // namespace

TannerGraph::TannerGraph(const BitMatrix &parity, double error_probability) : parity_(parity) {
    if (!(error_probability > 0.0 && error_probability < 1.0)) {
        throw std::invalid_argument("error probability must lie strictly inside (0, 1)");
    }
    prior_llr_ = clamp_llr(std::log((1.0 - error_probability) / error_probability));
    var_edges_.assign(parity.num_cols(), {});
    check_offsets_.push_back(0);
    for (std::size_t c = 0; c < parity.num_rows(); c++) {
        for (auto v : parity.row(c).ones()) {
            var_edges_[v].push_back(static_cast<std::uint32_t>(edge_var_.size()));
            edge_var_.push_back(v);
        }
        check_offsets_.push_back(edge_var_.size());
    }
}

BeliefPropagation::BeliefPropagation(const TannerGraph &graph)
    : graph_(graph),
      var_to_check_(graph.num_edges()),
      check_to_var_(graph.num_edges()),
      posterior_(graph.num_variables()),
      tanh_half_(graph.num_edges()) {
}

void BeliefPropagation::run(const BitString &syndrome, int max_iterations, BpResult &out) {
    if (max_iterations < 1) {
        throw std::invalid_argument("BP needs at least one iteration");
    }
    const std::size_t n = graph_.num_variables();
    const std::size_t m = graph_.num_checks();
    const double prior = graph_.prior_llr();

    if (out.hard_decision.size() != n) {
        out.hard_decision = BitString(n);
    }
    out.error_probability.resize(n);
    std::fill(var_to_check_.begin(), var_to_check_.end(), prior);
    std::fill(posterior_.begin(), posterior_.end(), prior);

    auto decide_and_check = [&]() {
        out.hard_decision.clear();
        for (std::size_t v = 0; v < n; v++) {
            if (posterior_[v] < 0) {
                out.hard_decision.flip(v);
            }
        }
        return graph_.parity().multiply(out.hard_decision) == syndrome;
    };

    out.iterations = 0;
    out.converged = decide_and_check();
    for (int it = 1; it <= max_iterations && !out.converged; it++) {
        // Check to variable: r = (-1)^s * 2 atanh(prod over other edges of tanh(q/2)).
        for (std::size_t c = 0; c < m; c++) {
            auto begin = graph_.check_begin(c);
            auto end = graph_.check_end(c);
            for (auto e = begin; e < end; e++) {
                tanh_half_[e] = std::tanh(var_to_check_[e] / 2.0);
            }
            double sign = syndrome.get(c) ? -1.0 : 1.0;
            for (auto e = begin; e < end; e++) {
                double prod = 1.0;
                for (auto f = begin; f < end; f++) {
                    if (f != e) {
                        prod *= tanh_half_[f];
                    }
                }
                prod = std::clamp(prod, -1.0 + 1e-15, 1.0 - 1e-15);
                check_to_var_[e] = clamp_llr(sign * 2.0 * std::atanh(prod));
            }
        }
        // Variable update and posterior.
        for (std::size_t v = 0; v < n; v++) {
            double total = prior;
            for (auto e : graph_.variable_edges(v)) {
                total += check_to_var_[e];
            }
            posterior_[v] = total;
            for (auto e : graph_.variable_edges(v)) {
                var_to_check_[e] = clamp_llr(total - check_to_var_[e]);
            }
        }
        out.iterations = it;
        out.converged = decide_and_check();
    }
    for (std::size_t v = 0; v < n; v++) {
        out.error_probability[v] = 1.0 / (1.0 + std::exp(posterior_[v]));
    }
}

OsdSolver::OsdSolver(const BitMatrix &parity) : parity_(parity) {
    for (std::size_t c = 0; c < parity.num_cols(); c++) {
        columns_.push_back(parity.column(c));
    }
}

void OsdSolver::solve(const BitString &syndrome, const std::vector<double> &error_probability, BitString &out) {
    const std::size_t n = parity_.num_cols();
    const std::size_t m = parity_.num_rows();
    if (error_probability.size() != n) {
        throw std::invalid_argument("reliability vector length does not match the number of data qubits");
    }
    if (syndrome.size() != m) {
        throw std::invalid_argument("syndrome length does not match the number of checks");
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
        return error_probability[a] > error_probability[b];
    });

    rows_.assign(m, BitString(n + 1));
    for (std::size_t j = 0; j < n; j++) {
        const auto &col = columns_[order_[j]];
        for (auto r : col.ones()) {
            rows_[r].flip(j);
        }
    }
    for (std::size_t r = 0; r < m; r++) {
        if (syndrome.get(r)) {
            rows_[r].flip(n);
        }
    }

    pivot_col_.clear();
    std::size_t rank = 0;
    for (std::size_t j = 0; j < n && rank < m; j++) {
        std::size_t pivot = rank;
        while (pivot < m && !rows_[pivot].get(j)) {
            pivot++;
        }
        if (pivot == m) {
            continue;
        }
        std::swap(rows_[pivot], rows_[rank]);
        for (std::size_t r = 0; r < m; r++) {
            if (r != rank && rows_[r].get(j)) {
                rows_[r] ^= rows_[rank];
            }
        }
        pivot_col_.push_back(static_cast<std::uint32_t>(j));
        rank++;
    }
    for (std::size_t r = rank; r < m; r++) {
        if (rows_[r].get(n)) {
            throw std::logic_error("OSD: syndrome outside the column space of the parity matrix");
        }
    }

    if (out.size() != n) {
        out = BitString(n);
    } else {
        out.clear();
    }
    for (std::size_t r = 0; r < rank; r++) {
        if (rows_[r].get(n)) {
            out.flip(order_[pivot_col_[r]]);
        }
    }
}

BposdDecoder::BposdDecoder(std::shared_ptr<const SurfaceCode> code, const DecoderConfig &config)
    : code_(std::move(code)),
      config_(validated(config)),
      graph_(code_->parity_matrix(), config.error_probability),
      bp_(graph_),
      osd_(graph_.parity()) {
}

void BposdDecoder::decode_into(const BitString &syndrome, DecodeOutcome &out) {
    check_syndrome(syndrome);
    out.decoder = DecoderKind::Bposd;
    bp_.run(syndrome, config_.bp_max_iterations, bp_result_);
    out.converged = bp_result_.converged;
    if (bp_result_.converged) {
        out.correction = bp_result_.hard_decision;
    } else {
        osd_.solve(syndrome, bp_result_.error_probability, out.correction);
    }
}

}  // namespace surfdec
