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

#ifndef GBSDOCK_SOLVERS_H
#define GBSDOCK_SOLVERS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "gbsdock/graph.h"
#include "gbsdock/rng.h"
#include "gbsdock/sampling.h"

namespace gbsdock {

/// How the grow stage picks among common neighbours of the clique.
enum class GrowRule {
    WeightProportional,  // probability proportional to w + 1e-9
    MaxWeight,           // heaviest, ties uniformly at random
};

inline constexpr double kSuccessTolerance = 1e-9;

struct SampleRecord {
    int sample_index;
    int initial_size;
    VertexSet shrunk;      // clique after greedy shrinking
    double shrunk_weight;
    VertexSet best;        // heaviest clique seen through local search
    double best_weight;
    int iterations_used;
    /// Size and weight of the best clique after k steps, k = 0..max_steps
    /// (hybrid pipeline only).
    std::vector<int> best_size_by_k;
    std::vector<double> best_weight_by_k;
};

struct SolveResult {
    VertexSet best_clique;
    double best_weight = 0.0;
    std::vector<SampleRecord> records;
    /// success_counts[k]: usable samples whose best clique after k local-search
    /// steps is a maximum-weight clique. success_curve = counts / usable.
    std::vector<long long> success_counts;
    std::vector<double> success_curve;
    long long usable_samples = 0;
    std::optional<double> optimum_weight;
};

/// Greedy shrinking: while the set is not a clique, remove a uniformly random
/// vertex among those of minimum degree inside the set and, among those, of
/// minimum weight.
VertexSet greedy_shrink(const WeightedGraph &g, const VertexSet &s, Rng &rng);
VertexSet greedy_shrink(const WeightedGraph &g, const VertexSet &s, std::uint64_t seed);

struct LocalSearchResult {
    VertexSet clique;
    int steps_used = 0;
    std::vector<VertexSet> trajectory;  // clique after each step taken
};

/// Grow/swap local search for at most max_steps steps. Stops early when
/// neither a grow nor a swap move exists. Throws ValidationError if start is
/// not a clique.
LocalSearchResult local_search(const WeightedGraph &g, const VertexSet &start, int max_steps, Rng &rng,
                               GrowRule rule = GrowRule::WeightProportional);
LocalSearchResult local_search(const WeightedGraph &g, const VertexSet &start, int max_steps, std::uint64_t seed,
                               GrowRule rule = GrowRule::WeightProportional);

/// Keeps the samples that are already cliques (empty patterns skipped). The
/// success curve has one entry: the fraction of non-empty samples that are a
/// maximum-weight clique. optimum_weight defaults to the brute-force oracle
/// when the graph is small enough.
SolveResult random_search(const WeightedGraph &g, const SampleBatch &batch,
                          std::optional<double> optimum_weight = std::nullopt);

/// Greedy shrinking followed by up to max_steps local-search steps per
/// sample. Zero-click samples are skipped. Sample i draws from the stream
/// derive_seed(seed, i), so results do not depend on `threads`.
SolveResult hybrid_pipeline(const WeightedGraph &g, const SampleBatch &batch, int max_steps, std::uint64_t seed,
                            std::optional<double> optimum_weight = std::nullopt,
                            GrowRule rule = GrowRule::WeightProportional, int threads = 1);

/// One row per (sample, k): sample,k,size,weight,success. Needs hybrid
/// records and a known optimum.
void write_solve_csv(const SolveResult &r, std::ostream &out);

}  // namespace gbsdock

#endif  // GBSDOCK_SOLVERS_H
