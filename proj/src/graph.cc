// Copyright 2026 The gbsdock Authors
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

#include "gbsdock/graph.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gbsdock/errors.h"

namespace gbsdock {

VertexSet::VertexSet(std::initializer_list<int> members) : VertexSet(std::vector<int>(members)) {}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.front() < 0) {
        throw InvalidVertexError("negative vertex index " + std::to_string(members_.front()));
    }
}

VertexSet VertexSet::all(int n) {
    std::vector<int> m(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) m[i] = i;
    return VertexSet(std::move(m));
}

VertexSet VertexSet::from_indicator(const std::vector<std::uint8_t> &mask) {
    std::vector<int> m;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) m.push_back(static_cast<int>(i));
    }
    return VertexSet(std::move(m));
}

bool VertexSet::contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }

VertexSet VertexSet::with(int v) const {
    auto m = members_;
    m.push_back(v);
    return VertexSet(std::move(m));
}

VertexSet VertexSet::without(int v) const {
    VertexSet out;
    out.members_.reserve(members_.size());
    for (int u : members_) {
        if (u != v) out.members_.push_back(u);
    }
    return out;
}

WeightedGraph::WeightedGraph(Eigen::MatrixXd adjacency, Eigen::VectorXd weights)
    : adjacency_(std::move(adjacency)), weights_(std::move(weights)) {
    const Eigen::Index n = weights_.size();
    if (n < 1) throw ValidationError("graph must have at least one vertex");
    if (adjacency_.rows() != n || adjacency_.cols() != n) {
        throw DimensionError("adjacency must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!std::isfinite(weights_[i]) || weights_[i] < 0.0) {
            throw ValidationError("vertex weight " + std::to_string(i) + " must be finite and non-negative");
        }
        if (adjacency_(i, i) != 0.0) throw ValidationError("adjacency diagonal must be zero");
        for (Eigen::Index j = 0; j < n; ++j) {
            const double a = adjacency_(i, j);
            if (a != 0.0 && a != 1.0) throw ValidationError("adjacency entries must be 0 or 1");
            if (a != adjacency_(j, i)) throw ValidationError("adjacency must be symmetric");
        }
    }
    neighbors_.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (adjacency_(i, j) != 0.0) neighbors_[i].push_back(static_cast<int>(j));
        }
    }
}

WeightedGraph WeightedGraph::from_edges(int n, const std::vector<std::pair<int, int>> &edges, Eigen::VectorXd weights) {
    if (n < 1) throw ValidationError("graph must have at least one vertex");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n) {
            throw InvalidVertexError("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        }
        if (i == j) throw ValidationError("self-loop on vertex " + std::to_string(i));
        a(i, j) = a(j, i) = 1.0;
    }
    return WeightedGraph(std::move(a), std::move(weights));
}

WeightedGraph WeightedGraph::complete(int n, Eigen::VectorXd weights) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Ones(n, n);
    a.diagonal().setZero();
    return WeightedGraph(std::move(a), std::move(weights));
}

std::size_t WeightedGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto &nb : neighbors_) total += nb.size();
    return total / 2;
}

std::vector<std::pair<int, int>> WeightedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n(); ++i) {
        for (int j : neighbors_[i]) {
            if (j > i) out.emplace_back(i, j);
        }
    }
    return out;
}

void WeightedGraph::check(const VertexSet &s) const {
    if (!s.empty() && s.members().back() >= n()) {
        throw InvalidVertexError("vertex " + std::to_string(s.members().back()) + " out of range for graph with " +
                                 std::to_string(n()) + " vertices");
    }
}

WeightedGraph induced_subgraph(const WeightedGraph &g, const VertexSet &s) {
    g.check(s);
    if (s.empty()) throw ValidationError("induced subgraph of an empty vertex set");
    const auto &idx = s.members();
    Eigen::MatrixXd a = g.adjacency()(idx, idx);
    Eigen::VectorXd w = g.weights()(idx);
    return WeightedGraph(std::move(a), std::move(w));
}

bool is_clique(const WeightedGraph &g, const VertexSet &s) {
    g.check(s);
    const auto &m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!g.adjacent(m[i], m[j])) return false;
        }
    }
    return true;
}

double clique_weight(const WeightedGraph &g, const VertexSet &s) {
    g.check(s);
    double total = 0.0;
    for (int v : s) total += g.weight(v);
    return total;
}

int degree(const WeightedGraph &g, int v) {
    if (v < 0 || v >= g.n()) throw InvalidVertexError("vertex " + std::to_string(v) + " out of range");
    return static_cast<int>(g.neighbors(v).size());
}

Eigen::MatrixXd laplacian(const WeightedGraph &g) {
    Eigen::MatrixXd l = -g.adjacency();
    l.diagonal() = g.adjacency().rowwise().sum();
    return l;
}

namespace {

struct CliqueWalker {
    const WeightedGraph &g;
    std::vector<std::uint32_t> nbr;
    std::vector<int> stack;
    const std::function<void(const VertexSet &, double)> &visit;

    // Candidates are restricted to vertices above the last member, so each
    // clique is produced once, in lexicographic order of its member list.
    void walk(std::uint32_t candidates, double weight) {
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            stack.push_back(v);
            const double w = weight + g.weight(v);
            visit(VertexSet(stack), w);
            walk(candidates & nbr[v], w);
            stack.pop_back();
        }
    }
};

std::vector<std::uint32_t> neighbor_masks(const WeightedGraph &g) {
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        for (int u : g.neighbors(v)) nbr[v] |= std::uint32_t{1} << u;
    }
    return nbr;
}

}  // namespace

void for_each_clique(const WeightedGraph &g, const std::function<void(const VertexSet &, double)> &visit) {
    if (g.n() > kBruteForceMaxVertices) {
        throw SizeError("exhaustive clique search limited to " + std::to_string(kBruteForceMaxVertices) +
                        " vertices, graph has " + std::to_string(g.n()));
    }
    CliqueWalker walker{g, neighbor_masks(g), {}, visit};
    const std::uint32_t everything = g.n() == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << g.n()) - 1);
    walker.walk(everything, 0.0);
}

VertexSet max_weighted_clique_bruteforce(const WeightedGraph &g) {
    VertexSet best;
    double best_weight = -1.0;
    for_each_clique(g, [&](const VertexSet &c, double w) {
        if (w > best_weight + 1e-12 * std::max(1.0, std::abs(best_weight))) {
            best = c;
            best_weight = w;
        }
    });
    return best;
}

}  // namespace gbsdock
