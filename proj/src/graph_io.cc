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

#include "gbsdock/graph_io.h"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "gbsdock/errors.h"

namespace gbsdock {

nlohmann::json graph_to_json(const WeightedGraph &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    std::vector<double> w(g.weights().data(), g.weights().data() + g.n());
    return {{"n", g.n()}, {"edges", std::move(edges)}, {"weights", std::move(w)}};
}

WeightedGraph graph_from_json(const nlohmann::json &j) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 1) throw ValidationError("graph JSON: n must be positive");
        const auto w = j.at("weights").get<std::vector<double>>();
        if (static_cast<int>(w.size()) != n) {
            throw ValidationError("graph JSON: expected " + std::to_string(n) + " weights, got " +
                                  std::to_string(w.size()));
        }
        std::vector<std::pair<int, int>> edges;
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ValidationError("graph JSON: edges must be [i, j] pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return WeightedGraph::from_edges(n, edges, Eigen::Map<const Eigen::VectorXd>(w.data(), n));
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("graph JSON: ") + e.what());
    }
}

WeightedGraph load_graph(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(path + ": " + e.what());
    }
    return graph_from_json(j);
}

void save_graph(const WeightedGraph &g, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write graph file " + path);
    out << graph_to_json(g).dump(2) << '\n';
}

void write_dimacs(const WeightedGraph &g, std::ostream &out) {
    const auto edges = g.edges();
    out << "c vertex-weighted graph; weights as 'c w <vertex> <weight>'\n";
    out << "p edge " << g.n() << ' ' << edges.size() << '\n';
    out << std::setprecision(17);
    for (int v = 0; v < g.n(); ++v) out << "c w " << v + 1 << ' ' << g.weight(v) << '\n';
    for (auto [i, j] : edges) out << "e " << i + 1 << ' ' << j + 1 << '\n';
}

}  // namespace gbsdock
