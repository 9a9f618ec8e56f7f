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

#include "gbsdock/solvers.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "gbsdock/errors.h"

namespace gbsdock {

namespace {

constexpr double kWeightFloor = 1e-9;

std::size_t pick_weighted(const WeightedGraph &g, const std::vector<int> &candidates, Rng &rng) {
    std::vector<double> w;
    w.reserve(candidates.size());
    for (int v : candidates) w.push_back(g.weight(v) + kWeightFloor);
    return rng.weighted_index(w);
}

std::size_t pick_heaviest(const WeightedGraph &g, const std::vector<int> &candidates, Rng &rng) {
    double top = -1.0;
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double w = g.weight(candidates[i]);
        if (w > top) {
            top = w;
            ties.clear();
        }
        if (w == top) ties.push_back(i);
    }
    return ties[rng.index(ties.size())];
}

}  // namespace

VertexSet greedy_shrink(const WeightedGraph &g, const VertexSet &s, Rng &rng) {
    g.check(s);
    std::vector<int> h = s.members();
    std::vector<int> deg;
    std::vector<std::size_t> lowest;
    while (h.size() > 1) {
        deg.assign(h.size(), 0);
        for (std::size_t i = 0; i < h.size(); ++i) {
            for (std::size_t j = i + 1; j < h.size(); ++j) {
                if (g.adjacent(h[i], h[j])) {
                    ++deg[i];
                    ++deg[j];
                }
            }
        }
        const int min_deg = *std::min_element(deg.begin(), deg.end());
        if (min_deg == static_cast<int>(h.size()) - 1) break;  // clique
        double min_w = INFINITY;
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (deg[i] == min_deg) min_w = std::min(min_w, g.weight(h[i]));
        }
        lowest.clear();
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (deg[i] == min_deg && g.weight(h[i]) == min_w) lowest.push_back(i);
        }
        h.erase(h.begin() + static_cast<std::ptrdiff_t>(lowest[rng.index(lowest.size())]));
    }
    return VertexSet(std::move(h));
}

VertexSet greedy_shrink(const WeightedGraph &g, const VertexSet &s, std::uint64_t seed) {
    Rng rng(seed);
    return greedy_shrink(g, s, rng);
}

LocalSearchResult local_search(const WeightedGraph &g, const VertexSet &start, int max_steps, Rng &rng,
                               GrowRule rule) {
    if (!is_clique(g, start)) throw ValidationError("local search must start from a clique");
    if (max_steps < 0) throw ValidationError("max_steps must be non-negative");
    const int n = g.n();
    std::vector<int> clique = start.members();
    std::vector<std::uint8_t> member(static_cast<std::size_t>(n), 0);
    for (int v : clique) member[v] = 1;

    LocalSearchResult result;
    std::vector<int> grow, swap_in, swap_out, preferred_in, preferred_out;
    for (int step = 0; step < max_steps; ++step) {
        grow.clear();
        swap_in.clear();
        swap_out.clear();
        for (int v = 0; v < n; ++v) {
            if (member[v]) continue;
            int miss = 0;
            int who = -1;
            for (int u : clique) {
                if (!g.adjacent(u, v)) {
                    ++miss;
                    who = u;
                    if (miss > 1) break;
                }
            }
            if (miss == 0) {
                grow.push_back(v);
            } else if (miss == 1) {
                swap_in.push_back(v);
                swap_out.push_back(who);
            }
        }
        if (!grow.empty()) {
            const std::size_t i =
                rule == GrowRule::MaxWeight ? pick_heaviest(g, grow, rng) : pick_weighted(g, grow, rng);
            clique.push_back(grow[i]);
            member[grow[i]] = 1;
        } else if (!swap_in.empty()) {
            preferred_in.clear();
            preferred_out.clear();
            for (std::size_t i = 0; i < swap_in.size(); ++i) {
                if (g.weight(swap_in[i]) >= g.weight(swap_out[i])) {
                    preferred_in.push_back(swap_in[i]);
                    preferred_out.push_back(swap_out[i]);
                }
            }
            int in, out;
            if (!preferred_in.empty()) {
                const std::size_t i = pick_weighted(g, preferred_in, rng);
                in = preferred_in[i];
                out = preferred_out[i];
            } else {
                const std::size_t i = rng.index(swap_in.size());
                in = swap_in[i];
                out = swap_out[i];
            }
            *std::find(clique.begin(), clique.end(), out) = in;
            member[out] = 0;
            member[in] = 1;
        } else {
            break;
        }
        ++result.steps_used;
        result.trajectory.emplace_back(clique);
    }
    result.clique = VertexSet(std::move(clique));
    return result;
}

LocalSearchResult local_search(const WeightedGraph &g, const VertexSet &start, int max_steps, std::uint64_t seed,
                               GrowRule rule) {
    Rng rng(seed);
    return local_search(g, start, max_steps, rng, rule);
}

namespace {

std::optional<double> resolve_optimum(const WeightedGraph &g, std::optional<double> given) {
    if (given) return given;
    if (g.n() > kBruteForceMaxVertices) return std::nullopt;
    return clique_weight(g, max_weighted_clique_bruteforce(g));
}

bool is_optimal(double weight, const std::optional<double> &optimum) {
    return optimum && std::abs(weight - *optimum) <= kSuccessTolerance;
}

void check_batch(const WeightedGraph &g, const SampleBatch &batch) {
    for (const auto &p : batch.patterns) {
        if (p.modes() != g.n()) throw ValidationError("sample length does not match the graph");
    }
}

void finish(SolveResult &r) {
    for (const auto &rec : r.records) {
        if (r.best_clique.empty() || rec.best_weight > r.best_weight) {
            r.best_clique = rec.best;
            r.best_weight = rec.best_weight;
        }
    }
    r.success_curve.clear();
    for (long long c : r.success_counts) {
        r.success_curve.push_back(r.usable_samples > 0 ? static_cast<double>(c) / r.usable_samples : 0.0);
    }
}

}  // namespace

SolveResult random_search(const WeightedGraph &g, const SampleBatch &batch, std::optional<double> optimum_weight) {
    check_batch(g, batch);
    SolveResult r;
    r.optimum_weight = resolve_optimum(g, optimum_weight);
    long long hits = 0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto &p = batch.patterns[i];
        if (p.count() == 0) continue;
        ++r.usable_samples;
        const VertexSet s = VertexSet::from_indicator(p.clicks);
        if (!is_clique(g, s)) continue;
        const double w = clique_weight(g, s);
        if (is_optimal(w, r.optimum_weight)) ++hits;
        r.records.push_back({static_cast<int>(i), static_cast<int>(s.size()), s, w, s, w, 0, {}, {}});
    }
    if (r.optimum_weight) r.success_counts = {hits};
    finish(r);
    return r;
}

SolveResult hybrid_pipeline(const WeightedGraph &g, const SampleBatch &batch, int max_steps, std::uint64_t seed,
                            std::optional<double> optimum_weight, GrowRule rule, int threads) {
    check_batch(g, batch);
    if (max_steps < 0) throw ValidationError("max_steps must be non-negative");
    SolveResult r;
    r.optimum_weight = resolve_optimum(g, optimum_weight);

    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        if (batch.patterns[i].count() > 0) usable.push_back(i);
    }
    r.usable_samples = static_cast<long long>(usable.size());
    r.records.resize(usable.size());
    // success_by_sample[u] = first k at which sample u is optimal, or -1
    std::vector<int> first_success(usable.size(), -1);

    auto run = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t u = begin; u < usable.size(); u += stride) {
            const std::size_t i = usable[u];
            Rng rng(derive_seed(seed, i));
            const VertexSet start = VertexSet::from_indicator(batch.patterns[i].clicks);
            const VertexSet shrunk = greedy_shrink(g, start, rng);
            const double shrunk_w = clique_weight(g, shrunk);
            VertexSet best = shrunk;
            double best_w = shrunk_w;
            std::vector<int> size_by_k(static_cast<std::size_t>(max_steps) + 1);
            std::vector<double> weight_by_k(static_cast<std::size_t>(max_steps) + 1);
            size_by_k[0] = static_cast<int>(best.size());
            weight_by_k[0] = best_w;
            if (is_optimal(best_w, r.optimum_weight)) first_success[u] = 0;
            const auto ls = local_search(g, shrunk, max_steps, rng, rule);
            for (int k = 1; k <= ls.steps_used; ++k) {
                const double w = clique_weight(g, ls.trajectory[k - 1]);
                if (w > best_w) {
                    best_w = w;
                    best = ls.trajectory[k - 1];
                }
                if (first_success[u] < 0 && is_optimal(best_w, r.optimum_weight)) first_success[u] = k;
                size_by_k[k] = static_cast<int>(best.size());
                weight_by_k[k] = best_w;
            }
            for (int k = ls.steps_used + 1; k <= max_steps; ++k) {
                size_by_k[k] = size_by_k[k - 1];
                weight_by_k[k] = weight_by_k[k - 1];
            }
            r.records[u] = {static_cast<int>(i), static_cast<int>(start.size()), shrunk, shrunk_w, best, best_w,
                            ls.steps_used, std::move(size_by_k), std::move(weight_by_k)};
        }
    };
    const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run, t, workers);
    }

    if (r.optimum_weight) {
        r.success_counts.assign(static_cast<std::size_t>(max_steps) + 1, 0);
        for (int k0 : first_success) {
            if (k0 < 0) continue;
            for (int k = k0; k <= max_steps; ++k) ++r.success_counts[k];
        }
    }
    finish(r);
    return r;
}

void write_solve_csv(const SolveResult &r, std::ostream &out) {
    if (!r.optimum_weight) throw ValidationError("solve CSV needs a known optimum");
    out << "sample,k,size,weight,success\n";
    out.precision(10);
    for (const auto &rec : r.records) {
        for (std::size_t k = 0; k < rec.best_weight_by_k.size(); ++k) {
            out << rec.sample_index << ',' << k << ',' << rec.best_size_by_k[k] << ',' << rec.best_weight_by_k[k]
                << ',' << (is_optimal(rec.best_weight_by_k[k], r.optimum_weight) ? 1 : 0) << '\n';
        }
    }
}

}  // namespace gbsdock
