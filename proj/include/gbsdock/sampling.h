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

#ifndef GBSDOCK_SAMPLING_H
#define GBSDOCK_SAMPLING_H

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gbsdock/encoding.h"
#include "gbsdock/gaussian_state.h"
#include "gbsdock/graph.h"
#include "gbsdock/rng.h"
#include "json.hpp"

namespace gbsdock {

enum class SampleSource { Gbs, GbsPostselected, Classical };

std::string source_name(SampleSource source);

struct SampleBatch {
    int modes = 0;
    std::vector<ClickPattern> patterns;
    std::uint64_t seed = 0;
    SampleSource source = SampleSource::Gbs;
    nlohmann::json provenance;  // encoding or baseline moments

    std::size_t size() const { return patterns.size(); }
};

inline constexpr int kChainMaxModes = 30;
inline constexpr long long kPostselectMaxSubsets = 10'000'000;
/// Samples per independent RNG stream; shard i is seeded with seed + i.
inline constexpr int kShardSize = 256;

/// Exact sampler for threshold detection on a Gaussian state. Mode k is drawn
/// from its conditional given modes 0..k-1; each conditional needs the
/// probability that mode k and every earlier quiet mode are empty while every
/// earlier clicked mode fired, summed by inclusion-exclusion over the clicked
/// set. Quiet modes are folded in by a Schur complement and the subset sum
/// reuses Cholesky factors along a depth-first walk, so one step costs
/// O(2^clicks * clicks^2).
class ThresholdChainSampler {
   public:
    explicit ThresholdChainSampler(const GaussianState &s);

    int modes() const { return modes_; }
    ClickPattern sample(Rng &rng);
    /// Product of the conditionals the sampler would use for this pattern.
    double pattern_probability(const ClickPattern &pattern);
    /// Probability that the `clicked` modes all click and the `quiet` modes
    /// are all empty, marginalising every other mode.
    double joint_probability(const std::vector<int> &clicked, const std::vector<int> &quiet);

   private:
    struct Conditioned;
    struct Step;

    int rows_per_mode() const;
    Conditioned condition(const std::vector<int> &modes, const std::vector<int> &quiet) const;
    Step step(const std::vector<int> &clicked, const std::vector<int> &quiet, int mode,
              long double clicked_given_quiet) const;
    template <typename Decide>
    double walk_chain(Decide &&decide);

    int modes_;
    bool split_;  // no x-p correlations: determinants factor over the two quadratures
    std::vector<Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>> systems_;  // blocks of sigma + I/2
};

/// Deterministic given (state, count, seed); independent of `threads`.
SampleBatch sample_threshold_chain(const GaussianState &s, int count, std::uint64_t seed, int threads = 1);

/// Collision-free post-selected sampling at exactly n_clicks clicks: every
/// n_clicks-subset S gets weight (det(Omega_S) Haf(A_S))^2.
SampleBatch sample_postselected(const WeightedGraph &g, const Encoding &e, int n_clicks, int count,
                                std::uint64_t seed);

/// Normalised post-selected distribution over all n_clicks-subsets, as
/// (subset, probability) pairs with zero-probability subsets dropped.
std::vector<std::pair<VertexSet, double>> postselected_distribution(const WeightedGraph &g, const Encoding &e,
                                                                    int n_clicks);

/// Moment-matched classical stand-in: a size drawn from Normal(mean, var),
/// rounded and clamped to [0, M], then a uniform subset of that size.
SampleBatch classical_baseline(int modes, double mean_n, double var_n, int count, std::uint64_t seed);

/// Uniform subsets of one fixed size.
SampleBatch uniform_subsets(int modes, int size, int count, std::uint64_t seed);

struct ClickMoments {
    double mean;
    double variance;  // unbiased; 0 for a single sample
};

ClickMoments estimate_moments(const SampleBatch &batch);

/// One row per sample: bitstring,clicks.
void write_batch_csv(const SampleBatch &batch, std::ostream &out);
/// Inverse of write_batch_csv; the source and seed are not recorded there.
SampleBatch read_batch_csv(std::istream &in);
nlohmann::json batch_sidecar(const SampleBatch &batch);

}  // namespace gbsdock

#endif  // GBSDOCK_SAMPLING_H
