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

#ifndef GBSDOCK_GRAPH_H
#define GBSDOCK_GRAPH_H

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

namespace gbsdock {

/// Sorted set of distinct vertex indices.
class VertexSet {
   public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> members);
    /// Sorts and removes duplicates. Negative indices are rejected.
    explicit VertexSet(std::vector<int> members);

    static VertexSet all(int n);
    /// Indices i with mask[i] != 0.
    static VertexSet from_indicator(const std::vector<std::uint8_t> &mask);

    const std::vector<int> &members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;
    int operator[](std::size_t i) const { return members_[i]; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    VertexSet with(int v) const;
    VertexSet without(int v) const;

    friend bool operator==(const VertexSet &, const VertexSet &) = default;
    friend auto operator<=>(const VertexSet &a, const VertexSet &b) { return a.members_ <=> b.members_; }

   private:
    std::vector<int> members_;
};

/// Undirected simple graph with non-negative vertex weights. Immutable after
/// construction.
class WeightedGraph {
   public:
    /// Validates: square symmetric 0/1 adjacency with zero diagonal, n >= 1,
    /// weights non-negative and finite, one weight per vertex.
    WeightedGraph(Eigen::MatrixXd adjacency, Eigen::VectorXd weights);

    static WeightedGraph from_edges(int n, const std::vector<std::pair<int, int>> &edges, Eigen::VectorXd weights);
    static WeightedGraph complete(int n, Eigen::VectorXd weights);
    static WeightedGraph complete(int n) { return complete(n, Eigen::VectorXd::Ones(n)); }

    int n() const { return static_cast<int>(weights_.size()); }
    const Eigen::MatrixXd &adjacency() const { return adjacency_; }
    const Eigen::VectorXd &weights() const { return weights_; }
    double weight(int v) const { return weights_[v]; }
    bool adjacent(int u, int v) const { return adjacency_(u, v) != 0.0; }
    const std::vector<int> &neighbors(int v) const { return neighbors_[v]; }
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    /// Throws InvalidVertexError unless every member lies in [0, n).
    void check(const VertexSet &s) const;

   private:
    Eigen::MatrixXd adjacency_;
    Eigen::VectorXd weights_;
    std::vector<std::vector<int>> neighbors_;
};

WeightedGraph induced_subgraph(const WeightedGraph &g, const VertexSet &s);

/// Empty and singleton sets are cliques.
bool is_clique(const WeightedGraph &g, const VertexSet &s);

double clique_weight(const WeightedGraph &g, const VertexSet &s);

int degree(const WeightedGraph &g, int v);

/// D - A.
Eigen::MatrixXd laplacian(const WeightedGraph &g);

inline constexpr int kBruteForceMaxVertices = 30;

/// Exhaustive maximum vertex-weighted clique. Every clique of the graph is
/// visited; weights within 1e-12 (relative) are treated as ties and resolved in
/// favour of the lexicographically smallest member list. Throws SizeError for
/// n > kBruteForceMaxVertices.
VertexSet max_weighted_clique_bruteforce(const WeightedGraph &g);

/// Calls visit(members, weight) for every non-empty clique. Same size guard as
/// the brute-force oracle.
void for_each_clique(const WeightedGraph &g, const std::function<void(const VertexSet &, double)> &visit);

}  // namespace gbsdock

#endif  // GBSDOCK_GRAPH_H
