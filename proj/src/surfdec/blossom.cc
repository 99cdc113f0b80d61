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

#include "surfdec/blossom.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

// Vertex ids are [0, n); blossom ids are [n, 2n). An edge k has endpoints
// 2k (its u side) and 2k+1 (its v side); endpoint p ^ 1 is the other end.
// Labels: 0 free, 1 outer (S), 2 inner (T), 5 breadcrumb during scans.

namespace surfdec {

namespace {

// Python-style index into a cyclic child list.
inline int wrap(int j, int len) {
    return ((j % len) + len) % len;
}

}  // namespace

std::int64_t BlossomMatcher::slack(int k) const {
    const auto &e = (*edges_)[k];
    return dualvar_[e.u] + dualvar_[e.v] - 2 * (2 * e.weight);
}

void BlossomMatcher::blossom_leaves(int b, std::vector<int> &out) const {
    if (b < n_) {
        out.push_back(b);
        return;
    }
    for (int t : blossomchilds_[b]) {
        blossom_leaves(t, out);
    }
}

void BlossomMatcher::assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    assert(label_[w] == 0 && label_[b] == 0);
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
        blossom_leaves(b, queue_);
    } else if (t == 2) {
        int base = blossombase_[b];
        assert(mate_[base] >= 0);
        assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
}

int BlossomMatcher::scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
        int b = inblossom_[v];
        if (label_[b] & 4) {
            base = blossombase_[b];
            break;
        }
        assert(label_[b] == 1);
        path.push_back(b);
        label_[b] = 5;
        if (labelend_[b] == -1) {
            v = -1;
        } else {
            v = endpoint_[labelend_[b]];
            b = inblossom_[v];
            assert(label_[b] == 2);
            v = endpoint_[labelend_[b]];
        }
        if (w != -1) {
            std::swap(v, w);
        }
    }
    for (int b : path) {
        label_[b] = 1;
    }
    return base;
}

void BlossomMatcher::add_blossom(int base, int k) {
    int v = (*edges_)[k].u;
    int w = (*edges_)[k].v;
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto &path = blossomchilds_[b];
    auto &endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
        blossomparent_[bv] = b;
        path.push_back(bv);
        endps.push_back(labelend_[bv]);
        v = endpoint_[labelend_[bv]];
        bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
        blossomparent_[bw] = b;
        path.push_back(bw);
        endps.push_back(labelend_[bw] ^ 1);
        w = endpoint_[labelend_[bw]];
        bw = inblossom_[w];
    }
    assert(label_[bb] == 1);
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;

    std::vector<int> leaves;
    blossom_leaves(b, leaves);
    for (int leaf : leaves) {
        if (label_[inblossom_[leaf]] == 2) {
            queue_.push_back(leaf);
        }
        inblossom_[leaf] = b;
    }

    std::vector<int> bestedgeto(2 * n_, -1);
    auto consider = [&](int edge) {
        int i = (*edges_)[edge].u;
        int j = (*edges_)[edge].v;
        if (inblossom_[j] == b) {
            std::swap(i, j);
        }
        int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(edge) < slack(bestedgeto[bj]))) {
            bestedgeto[bj] = edge;
        }
    };
    for (int child : path) {
        if (!has_bestedges_[child]) {
            leaves.clear();
            blossom_leaves(child, leaves);
            for (int leaf : leaves) {
                for (int p : neighbend_[leaf]) {
                    consider(p / 2);
                }
            }
        } else {
            for (int edge : blossombestedges_[child]) {
                consider(edge);
            }
        }
        blossombestedges_[child].clear();
        has_bestedges_[child] = false;
        bestedge_[child] = -1;
    }
    auto &best = blossombestedges_[b];
    best.clear();
    for (int edge : bestedgeto) {
        if (edge != -1) {
            best.push_back(edge);
        }
    }
    has_bestedges_[b] = true;
    bestedge_[b] = -1;
    for (int edge : best) {
        if (bestedge_[b] == -1 || slack(edge) < slack(bestedge_[b])) {
            bestedge_[b] = edge;
        }
    }
}

void BlossomMatcher::expand_blossom(int b, bool endstage) {
    std::vector<int> leaves;
    for (int s : blossomchilds_[b]) {
        blossomparent_[s] = -1;
        if (s < n_) {
            inblossom_[s] = s;
        } else if (endstage && dualvar_[s] == 0) {
            expand_blossom(s, endstage);
        } else {
            leaves.clear();
            blossom_leaves(s, leaves);
            for (int leaf : leaves) {
                inblossom_[leaf] = s;
            }
        }
    }
    if (!endstage && label_[b] == 2) {
        const auto &childs = blossomchilds_[b];
        const auto &endps = blossomendps_[b];
        int len = static_cast<int>(childs.size());
        int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
        int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
        int jstep;
        int endptrick;
        if (j & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        int p = labelend_[b];
        while (j != 0) {
            label_[endpoint_[p ^ 1]] = 0;
            label_[endpoint_[endps[wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
            assign_label(endpoint_[p ^ 1], 2, p);
            allowedge_[endps[wrap(j - endptrick, len)] / 2] = true;
            j += jstep;
            p = endps[wrap(j - endptrick, len)] ^ endptrick;
            allowedge_[p / 2] = true;
            j += jstep;
        }
        int bv = childs[wrap(j, len)];
        label_[endpoint_[p ^ 1]] = label_[bv] = 2;
        labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
        bestedge_[bv] = -1;
        j += jstep;
        while (childs[wrap(j, len)] != entrychild) {
            bv = childs[wrap(j, len)];
            if (label_[bv] == 1) {
                j += jstep;
                continue;
            }
            leaves.clear();
            blossom_leaves(bv, leaves);
            int v = leaves.back();
            for (int leaf : leaves) {
                if (label_[leaf] != 0) {
                    v = leaf;
                    break;
                }
            }
            if (label_[v] != 0) {
                assert(label_[v] == 2);
                assert(inblossom_[v] == bv);
                label_[v] = 0;
                label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                assign_label(v, 2, labelend_[v]);
            }
            j += jstep;
        }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = false;
    bestedge_[b] = -1;
    unusedblossoms_.push_back(b);
}

void BlossomMatcher::augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) {
        t = blossomparent_[t];
    }
    if (t >= n_) {
        augment_blossom(t, v);
    }
    auto &childs = blossomchilds_[b];
    auto &endps = blossomendps_[b];
    int len = static_cast<int>(childs.size());
    int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
    } else {
        jstep = -1;
        endptrick = 1;
    }
    while (j != 0) {
        j += jstep;
        t = childs[wrap(j, len)];
        int p = endps[wrap(j - endptrick, len)] ^ endptrick;
        if (t >= n_) {
            augment_blossom(t, endpoint_[p]);
        }
        j += jstep;
        t = childs[wrap(j, len)];
        if (t >= n_) {
            augment_blossom(t, endpoint_[p ^ 1]);
        }
        mate_[endpoint_[p]] = p ^ 1;
        mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[b] = blossombase_[childs[0]];
    assert(blossombase_[b] == v);
}

void BlossomMatcher::augment_matching(int k) {
    int ends[2][2] = {{(*edges_)[k].u, 2 * k + 1}, {(*edges_)[k].v, 2 * k}};
    for (auto &end : ends) {
        int s = end[0];
        int p = end[1];
        while (true) {
            int bs = inblossom_[s];
            assert(label_[bs] == 1);
            if (bs >= n_) {
                augment_blossom(bs, s);
            }
            mate_[s] = p;
            if (labelend_[bs] == -1) {
                break;
            }
            int t = endpoint_[labelend_[bs]];
            int bt = inblossom_[t];
            assert(label_[bt] == 2);
            s = endpoint_[labelend_[bt]];
            int j = endpoint_[labelend_[bt] ^ 1];
            assert(blossombase_[bt] == t);
            if (bt >= n_) {
                augment_blossom(bt, j);
            }
            mate_[j] = labelend_[bt];
            p = labelend_[bt] ^ 1;
        }
    }
}

const std::vector<int> &BlossomMatcher::solve(
    int num_vertices, const std::vector<WeightedEdge> &edges, bool max_cardinality) {
    n_ = num_vertices;
    edges_ = &edges;
    int nedge = static_cast<int>(edges.size());
    result_.assign(n_, -1);
    if (n_ == 0 || nedge == 0) {
        return result_;
    }

    // Weights are doubled internally so every dual update stays integral.
    std::int64_t maxweight = 0;
    for (const auto &e : edges) {
        if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
            throw std::invalid_argument("matching edge endpoints out of range");
        }
        maxweight = std::max(maxweight, 2 * e.weight);
    }

    endpoint_.resize(2 * nedge);
    neighbend_.assign(n_, {});
    for (int k = 0; k < nedge; k++) {
        endpoint_[2 * k] = edges[k].u;
        endpoint_[2 * k + 1] = edges[k].v;
        neighbend_[edges[k].u].push_back(2 * k + 1);
        neighbend_[edges[k].v].push_back(2 * k);
    }
    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    labelend_.assign(2 * n_, -1);
    inblossom_.resize(n_);
    std::iota(inblossom_.begin(), inblossom_.end(), 0);
    blossomparent_.assign(2 * n_, -1);
    blossomchilds_.resize(2 * n_);
    blossomendps_.resize(2 * n_);
    blossombestedges_.resize(2 * n_);
    for (int b = 0; b < 2 * n_; b++) {
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombestedges_[b].clear();
    }
    has_bestedges_.assign(2 * n_, false);
    blossombase_.assign(2 * n_, -1);
    std::iota(blossombase_.begin(), blossombase_.begin() + n_, 0);
    bestedge_.assign(2 * n_, -1);
    unusedblossoms_.clear();
    for (int b = n_; b < 2 * n_; b++) {
        unusedblossoms_.push_back(b);
    }
    dualvar_.assign(2 * n_, 0);
    std::fill(dualvar_.begin(), dualvar_.begin() + n_, maxweight);
    allowedge_.assign(nedge, false);
    queue_.clear();

    for (int stage = 0; stage < n_; stage++) {
        std::fill(label_.begin(), label_.end(), 0);
        std::fill(bestedge_.begin(), bestedge_.end(), -1);
        for (int b = n_; b < 2 * n_; b++) {
            blossombestedges_[b].clear();
            has_bestedges_[b] = false;
        }
        std::fill(allowedge_.begin(), allowedge_.end(), false);
        queue_.clear();

        for (int v = 0; v < n_; v++) {
            if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
                assign_label(v, 1, -1);
            }
        }

        bool augmented = false;
        while (true) {
            while (!queue_.empty() && !augmented) {
                int v = queue_.back();
                queue_.pop_back();
                assert(label_[inblossom_[v]] == 1);
                for (int p : neighbend_[v]) {
                    int k = p / 2;
                    int w = endpoint_[p];
                    if (inblossom_[v] == inblossom_[w]) {
                        continue;
                    }
                    std::int64_t kslack = 0;
                    if (!allowedge_[k]) {
                        kslack = slack(k);
                        if (kslack <= 0) {
                            allowedge_[k] = true;
                        }
                    }
                    if (allowedge_[k]) {
                        if (label_[inblossom_[w]] == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (label_[inblossom_[w]] == 1) {
                            int base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if (label_[w] == 0) {
                            assert(label_[inblossom_[w]] == 2);
                            label_[w] = 2;
                            labelend_[w] = p ^ 1;
                        }
                    } else if (label_[inblossom_[w]] == 1) {
                        int b = inblossom_[v];
                        if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                            bestedge_[b] = k;
                        }
                    } else if (label_[w] == 0) {
                        if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                            bestedge_[w] = k;
                        }
                    }
                }
            }
            if (augmented) {
                break;
            }

            int deltatype = -1;
            std::int64_t delta = 0;
            int deltaedge = -1;
            int deltablossom = -1;
            if (!max_cardinality) {
                deltatype = 1;
                delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
            }
            for (int v = 0; v < n_; v++) {
                if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                    std::int64_t d = slack(bestedge_[v]);
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 2;
                        deltaedge = bestedge_[v];
                    }
                }
            }
            for (int b = 0; b < 2 * n_; b++) {
                if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                    std::int64_t kslack = slack(bestedge_[b]);
                    assert(kslack % 2 == 0);
                    std::int64_t d = kslack / 2;
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = bestedge_[b];
                    }
                }
            }
            for (int b = n_; b < 2 * n_; b++) {
                if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                    (deltatype == -1 || dualvar_[b] < delta)) {
                    delta = dualvar_[b];
                    deltatype = 4;
                    deltablossom = b;
                }
            }
            if (deltatype == -1) {
                assert(max_cardinality);
                deltatype = 1;
                delta = std::max<std::int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
            }

            for (int v = 0; v < n_; v++) {
                if (label_[inblossom_[v]] == 1) {
                    dualvar_[v] -= delta;
                } else if (label_[inblossom_[v]] == 2) {
                    dualvar_[v] += delta;
                }
            }
            for (int b = n_; b < 2 * n_; b++) {
                if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                    if (label_[b] == 1) {
                        dualvar_[b] += delta;
                    } else if (label_[b] == 2) {
                        dualvar_[b] -= delta;
                    }
                }
            }

            if (deltatype == 1) {
                break;
            } else if (deltatype == 2) {
                allowedge_[deltaedge] = true;
                int i = edges[deltaedge].u;
                int j = edges[deltaedge].v;
                if (label_[inblossom_[i]] == 0) {
                    std::swap(i, j);
                }
                assert(label_[inblossom_[i]] == 1);
                queue_.push_back(i);
            } else if (deltatype == 3) {
                allowedge_[deltaedge] = true;
                int i = edges[deltaedge].u;
                assert(label_[inblossom_[i]] == 1);
                queue_.push_back(i);
            } else {
                expand_blossom(deltablossom, false);
            }
        }

        if (!augmented) {
            break;
        }
        for (int b = n_; b < 2 * n_; b++) {
            if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
                expand_blossom(b, true);
            }
        }
    }

    for (int v = 0; v < n_; v++) {
        result_[v] = mate_[v] >= 0 ? endpoint_[mate_[v]] : -1;
    }
    return result_;
}

std::vector<int> min_weight_perfect_matching(
    BlossomMatcher &matcher, int num_vertices, const std::vector<WeightedEdge> &edges) {
    std::int64_t top = 0;
    for (const auto &e : edges) {
        if (e.weight < 0) {
            throw std::invalid_argument("perfect matching weights must be non-negative");
        }
        top = std::max(top, e.weight);
    }
    std::vector<WeightedEdge> flipped;
    flipped.reserve(edges.size());
    for (const auto &e : edges) {
        flipped.push_back({e.u, e.v, top + 1 - e.weight});
    }
    std::vector<int> mate = matcher.solve(num_vertices, flipped, true);
    for (int v = 0; v < num_vertices; v++) {
        if (mate[v] < 0) {
            throw std::runtime_error("graph has no perfect matching");
        }
    }
    return mate;
}

}  // namespace surfdec
