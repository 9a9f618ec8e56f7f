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

#include "gbsdock/planted.h"

#include <algorithm>
#include <cmath>

#include "gbsdock/errors.h"
#include "gbsdock/rng.h"

namespace gbsdock {

std::string profile_name(WeightProfile p) { return p == WeightProfile::HeavyCore ? "heavy-core" : "uniform-light"; }

WeightProfile parse_profile(const std::string &name) {
    if (name == "heavy-core") return WeightProfile::HeavyCore;
    if (name == "uniform-light") return WeightProfile::UniformLight;
    throw ValidationError("unknown weight profile '" + name + "'");
}

namespace {

double draw(Rng &rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

struct Candidate {
    Eigen::MatrixXd adjacency;
    Eigen::VectorXd weights;
    std::vector<int> planted;
};

Candidate draw_candidate(const PlantedParams &p, Rng &rng) {
    Candidate c;
    std::vector<int> order(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) order[i] = i;
    for (int i = 0; i < p.clique_size; ++i) {
        std::swap(order[i], order[i + static_cast<int>(rng.index(static_cast<std::uint64_t>(p.n - i)))]);
    }
    c.planted.assign(order.begin(), order.begin() + p.clique_size);

    c.adjacency = Eigen::MatrixXd::Zero(p.n, p.n);
    for (int i = 0; i < p.n; ++i) {
        for (int j = i + 1; j < p.n; ++j) {
            if (rng.uniform() < p.edge_density) c.adjacency(i, j) = c.adjacency(j, i) = 1.0;
        }
    }
    const auto force_clique = [&](const std::vector<int> &members) {
        for (int a : members) {
            for (int b : members) {
                if (a != b) c.adjacency(a, b) = 1.0;
            }
        }
    };
    force_clique(c.planted);

    // Decoys are full-size cliques among the remaining vertices.
    const int rest = p.n - p.clique_size;
    if (p.decoy_cliques > 0 && rest >= p.clique_size) {
        for (int d = 0; d < p.decoy_cliques; ++d) {
            std::vector<int> pool(order.begin() + p.clique_size, order.end());
            for (int i = 0; i < p.clique_size; ++i) {
                std::swap(pool[i], pool[i + static_cast<int>(rng.index(static_cast<std::uint64_t>(rest - i)))]);
            }
            pool.resize(static_cast<std::size_t>(p.clique_size));
            force_clique(pool);
        }
    }

    c.weights.resize(p.n);
    if (p.weight_profile == WeightProfile::UniformLight) {
        c.weights.setConstant(0.1);
    } else {
        // Background weights span the same range as the core so heavy
        // impostor cliques exist; the oracle check below keeps the planted one
        // on top.
        for (int i = 0; i < p.n; ++i) c.weights[i] = draw(rng, 0.0, 0.5);
        const int core = std::max(0, p.clique_size - 2);
        for (int k = 0; k < p.clique_size; ++k) {
            c.weights[c.planted[k]] = k < core ? draw(rng, 0.6, 0.75) : draw(rng, 0.15, 0.3);
        }
    }
    std::sort(c.planted.begin(), c.planted.end());
    return c;
}

}  // namespace

PlantedInstance generate_planted_instance(const PlantedParams &p) {
    if (p.n < 1 || p.n > kBruteForceMaxVertices) {
        throw ValidationError("planted instances need 1 <= n <= " + std::to_string(kBruteForceMaxVertices));
    }
    if (p.clique_size < 1 || p.clique_size > p.n) throw ValidationError("clique size must lie in [1, n]");
    if (!(p.edge_density >= 0.0 && p.edge_density < 1.0)) throw ValidationError("edge density must lie in [0, 1)");
    if (p.decoy_cliques < 0) throw ValidationError("decoy_cliques must be non-negative");
    if (p.max_retries < 1) throw ValidationError("max_retries must be positive");

    for (int attempt = 0; attempt < p.max_retries; ++attempt) {
        Rng rng(derive_seed(p.seed, static_cast<std::uint64_t>(attempt)));
        Candidate c = draw_candidate(p, rng);
        WeightedGraph g(std::move(c.adjacency), std::move(c.weights));
        const VertexSet planted(c.planted);
        const double planted_w = clique_weight(g, planted);

        bool ok = true;
        double runner_up = -1.0;
        for_each_clique(g, [&](const VertexSet &q, double w) {
            if (!ok) return;
            if (p.require_max_size && static_cast<int>(q.size()) > p.clique_size) ok = false;
            if (q != planted) runner_up = std::max(runner_up, w);
        });
        if (!ok || runner_up > planted_w - p.weight_margin) continue;
        if (max_weighted_clique_bruteforce(g) != planted) continue;
        return {std::move(g), planted, p, attempt + 1};
    }
    throw NumericalError("could not generate a planted instance with a unique maximum-weight clique in " +
                         std::to_string(p.max_retries) + " attempts");
}

nlohmann::json planted_params_to_json(const PlantedParams &p) {
    return {{"n", p.n},
            {"clique_size", p.clique_size},
            {"edge_density", p.edge_density},
            {"weight_profile", profile_name(p.weight_profile)},
            {"seed", p.seed},
            {"require_max_size", p.require_max_size},
            {"decoy_cliques", p.decoy_cliques},
            {"weight_margin", p.weight_margin},
            {"max_retries", p.max_retries}};
}

PlantedParams planted_params_from_json(const nlohmann::json &j) {
    PlantedParams p;
    try {
        p.n = j.value("n", p.n);
        p.clique_size = j.value("clique_size", p.clique_size);
        p.edge_density = j.value("edge_density", p.edge_density);
        p.weight_profile = parse_profile(j.value("weight_profile", profile_name(p.weight_profile)));
        p.seed = j.value("seed", p.seed);
        p.require_max_size = j.value("require_max_size", p.require_max_size);
        p.decoy_cliques = j.value("decoy_cliques", p.decoy_cliques);
        p.weight_margin = j.value("weight_margin", p.weight_margin);
        p.max_retries = j.value("max_retries", p.max_retries);
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("planted instance parameters: ") + e.what());
    }
    return p;
}

}  // namespace gbsdock
