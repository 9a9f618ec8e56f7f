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

#ifndef GBSDOCK_PLANTED_H
#define GBSDOCK_PLANTED_H

#include <cstdint>
#include <string>

#include "gbsdock/graph.h"
#include "json.hpp"

namespace gbsdock {

enum class WeightProfile {
    HeavyCore,     // planted clique = heavy core plus two light vertices
    UniformLight,  // every vertex has the same small weight
};

std::string profile_name(WeightProfile p);
WeightProfile parse_profile(const std::string &name);

struct PlantedParams {
    int n = 24;
    int clique_size = 8;
    double edge_density = 0.15;
    WeightProfile weight_profile = WeightProfile::HeavyCore;
    std::uint64_t seed = 1;
    /// Also reject instances with a clique larger than clique_size.
    bool require_max_size = true;
    /// Extra cliques of clique_size forced among the non-planted vertices.
    int decoy_cliques = 2;
    /// Every other clique must be lighter than the planted one by this much.
    double weight_margin = 1e-6;
    int max_retries = 100;
};

struct PlantedInstance {
    WeightedGraph graph;
    VertexSet planted_clique;
    PlantedParams params;
    int attempts = 0;  // retries used, 1-based
};

/// Random background graph of the given density with a planted clique whose
/// total weight is the unique maximum, as confirmed by the exhaustive oracle.
/// Attempt a uses the stream derive_seed(seed, a). Throws NumericalError when
/// no attempt passes within max_retries.
PlantedInstance generate_planted_instance(const PlantedParams &params);

nlohmann::json planted_params_to_json(const PlantedParams &p);
PlantedParams planted_params_from_json(const nlohmann::json &j);

}  // namespace gbsdock

#endif  // GBSDOCK_PLANTED_H
