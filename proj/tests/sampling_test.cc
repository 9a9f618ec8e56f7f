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


#include "gbsdock/sampling.h"

#include <cmath>
#include <map>
#include <sstream>

#include "gbsdock/encoding.h"
#include "gbsdock/errors.h"
#include "gbsdock/hafnian.h"
#include "gbsdock/stats.h"
#include "gbsdock/tuning.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace gbsdock;

namespace {

std::vector<ClickPattern> all_patterns(int m) {
    std::vector<ClickPattern> out;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<std::uint8_t> c(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) c[i] = (mask >> i) & 1;
        out.emplace_back(c);
    }
    return out;
}

int mask_of(const ClickPattern &p) {
    int mask = 0;
    for (int i = 0; i < p.modes(); ++i) mask |= p.clicks[i] << i;
    return mask;
}

GaussianState random_state(int m, Rng &rng, double target, double eta = 1.0) {
    const WeightedGraph g = fixtures::random_graph(m, 0.6, rng);
    return device_state(tune_c_for_clicks(g, 1.0, target, eta), eta);
}

// sigma with modes relabelled so new mode i is old mode perm[i].
GaussianState permuted(const GaussianState &s, const std::vector<int> &perm) {
    const int m = s.modes();
    std::vector<int> idx;
    for (int p : perm) idx.push_back(p);
    for (int p : perm) idx.push_back(p + m);
    return GaussianState(s.covariance()(idx, idx));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

TEST(ChainSampler, vacuum_never_clicks) {
    const SampleBatch b = sample_threshold_chain(GaussianState::vacuum(5), 500, 1);
    for (const auto &p : b.patterns) EXPECT_EQ(p.count(), 0);
    EXPECT_EQ(b.modes, 5);
    EXPECT_EQ(b.source, SampleSource::Gbs);
}

TEST(ChainSampler, conditionals_reproduce_threshold_probabilities) {
    Rng rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        const int m = 2 + static_cast<int>(rng.index(7));
        const GaussianState s = random_state(m, rng, 0.3 * m, trial % 2 ? 0.7 : 1.0);
        ThresholdChainSampler chain(s);
        for (const auto &p : all_patterns(m)) {
            const double expected = threshold_probability(s, p);
            EXPECT_NEAR(chain.pattern_probability(p), expected, 1e-9 * std::max(1.0, expected));
        }
    }
}

TEST(ChainSampler, joint_probability_matches_marginalised_patterns) {
    Rng rng(8);
    const GaussianState s = random_state(6, rng, 2.5);
    ThresholdChainSampler chain(s);
    const std::vector<int> clicked = {1, 4}, quiet = {0, 5};
    double expected = 0.0;
    for (const auto &p : all_patterns(6)) {
        if (p.clicks[1] && p.clicks[4] && !p.clicks[0] && !p.clicks[5]) expected += threshold_probability(s, p);
    }
    EXPECT_NEAR(chain.joint_probability(clicked, quiet), expected, 1e-10);
    EXPECT_NEAR(chain.joint_probability({}, quiet), vacuum_probability(s, quiet), 1e-12);
}

TEST(ChainSampler, empirical_distribution_matches) {
    Rng rng(9);
    const GaussianState s = random_state(4, rng, 1.5);
    const int n = 100000;
    const SampleBatch b = sample_threshold_chain(s, n, 123);
    std::vector<double> freq(16, 0.0), exact(16, 0.0);
    for (const auto &p : b.patterns) freq[mask_of(p)] += 1.0 / n;
    for (const auto &p : all_patterns(4)) exact[mask_of(p)] = threshold_probability(s, p);
    EXPECT_LE(total_variation(freq, exact), 0.01);
    for (int i = 0; i < 16; ++i) {
        const double se = std::sqrt(exact[i] * (1 - exact[i]) / n);
        EXPECT_LE(std::abs(freq[i] - exact[i]), 4 * se + 1e-12) << "pattern " << i;
    }
}

TEST(ChainSampler, mean_clicks_consistent) {
    Rng rng(10);
    const GaussianState s = random_state(10, rng, 3.0);
    const int n = 20000;
    const SampleBatch b = sample_threshold_chain(s, n, 5);
    const ClickMoments m = estimate_moments(b);
    EXPECT_NEAR(m.mean, mean_clicks(s), 3 * std::sqrt(m.variance / n));
}

TEST(ChainSampler, mode_order_invariance) {
    Rng rng(11);
    const GaussianState s = random_state(6, rng, 2.0);
    const std::vector<int> perm = {3, 0, 5, 1, 4, 2};
    const GaussianState t = permuted(s, perm);
    ThresholdChainSampler a(s), b(t);
    for (const auto &p : all_patterns(6)) {
        std::vector<std::uint8_t> q(6);
        for (int i = 0; i < 6; ++i) q[i] = p.clicks[perm[i]];
        EXPECT_NEAR(a.pattern_probability(p), b.pattern_probability(ClickPattern(q)), 1e-10);
    }
}

TEST(ChainSampler, general_covariance_path) {
    // Rotating x and p mixes the quadratures, so the split shortcut is off.
    Rng rng(12);
    const GaussianState s = random_state(4, rng, 1.5);
    const int m = 4;
    Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    for (int j = 0; j < m; ++j) {
        const double th = 0.3 + 0.2 * j;
        rot(j, j) = std::cos(th);
        rot(j, j + m) = -std::sin(th);
        rot(j + m, j) = std::sin(th);
        rot(j + m, j + m) = std::cos(th);
    }
    const GaussianState r(rot * s.covariance() * rot.transpose());
    ThresholdChainSampler chain(r);
    for (const auto &p : all_patterns(m)) {
        EXPECT_NEAR(chain.pattern_probability(p), threshold_probability(r, p), 1e-10);
        // phase rotations do not change photon statistics
        EXPECT_NEAR(threshold_probability(r, p), threshold_probability(s, p), 1e-10);
    }
}

TEST(ChainSampler, deterministic_and_thread_independent) {
    Rng rng(13);
    const GaussianState s = random_state(8, rng, 2.5);
    const SampleBatch a = sample_threshold_chain(s, 700, 77, 1);
    const SampleBatch b = sample_threshold_chain(s, 700, 77, 3);
    const SampleBatch c = sample_threshold_chain(s, 700, 78, 1);
    EXPECT_EQ(a.patterns, b.patterns);
    EXPECT_NE(a.patterns, c.patterns);
    EXPECT_EQ(a.seed, 77u);
}

TEST(ChainSampler, size_guard) {
    EXPECT_THROW(ThresholdChainSampler(GaussianState::vacuum(kChainMaxModes + 1)), SizeError);
    EXPECT_THROW(sample_threshold_chain(GaussianState::vacuum(2), -1, 0), ValidationError);
}

TEST(Postselected, star_graph_only_edges) {
    const WeightedGraph star = WeightedGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}, Eigen::VectorXd::Ones(4));
    const Encoding e = build_encoding(star, 1.0);
    const auto dist = postselected_distribution(star, e, 2);
    ASSERT_EQ(dist.size(), 3u);
    for (const auto &[s, p] : dist) {
        EXPECT_TRUE(s.contains(0));
        EXPECT_NEAR(p, 1.0 / 3.0, 1e-12);
    }
    const SampleBatch b = sample_postselected(star, e, 2, 1000, 4);
    EXPECT_EQ(b.source, SampleSource::GbsPostselected);
    for (const auto &p : b.patterns) {
        EXPECT_EQ(p.count(), 2);
        EXPECT_EQ(p.clicks[0], 1);
    }
}

TEST(Postselected, complete_graph_is_uniform) {
    const WeightedGraph k6 = WeightedGraph::complete(6);
    const auto dist = postselected_distribution(k6, build_encoding(k6, 1.0), 4);
    ASSERT_EQ(dist.size(), 15u);
    for (const auto &[s, p] : dist) EXPECT_NEAR(p, 1.0 / 15.0, 1e-12);
}

TEST(Postselected, weights_follow_hafnian_formula) {
    Rng rng(14);
    const WeightedGraph g = fixtures::random_graph(8, 0.6, rng);
    const Encoding e = build_encoding(g, 1.0);
    const auto dist = postselected_distribution(g, e, 4);
    double total = 0.0;
    std::map<VertexSet, double> raw;
    for (int mask = 0; mask < 256; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != 4) continue;
        std::vector<int> idx;
        for (int i = 0; i < 8; ++i) {
            if (mask >> i & 1) idx.push_back(i);
        }
        const double w = std::pow(e.omega(idx).prod() * hafnian(Eigen::MatrixXd(g.adjacency()(idx, idx))), 2);
        raw[VertexSet(idx)] = w;
        total += w;
    }
    double sum = 0.0;
    for (const auto &[s, p] : dist) {
        EXPECT_NEAR(p, raw[s] / total, 1e-12);
        EXPECT_GT(p, 0.0);
        sum += p;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(Postselected, sampled_frequencies_match_distribution) {
    Rng rng(15);
    const WeightedGraph g = fixtures::random_graph(7, 0.7, rng);
    const Encoding e = build_encoding(g, 1.0);
    const auto dist = postselected_distribution(g, e, 4);
    const int n = 50000;
    const SampleBatch b = sample_postselected(g, e, 4, n, 99);
    std::map<VertexSet, double> freq;
    for (const auto &p : b.patterns) freq[VertexSet::from_indicator(p.clicks)] += 1.0 / n;
    std::vector<double> f, q;
    for (const auto &[s, p] : dist) {
        f.push_back(freq[s]);
        q.push_back(p);
    }
    EXPECT_EQ(freq.size(), dist.size());
    EXPECT_LE(total_variation(f, q), 0.02);
}

TEST(Postselected, agrees_with_chain_rule_at_low_squeezing) {
    Rng rng(16);
    const WeightedGraph g = fixtures::random_graph(8, 0.6, rng);
    const Encoding e = build_encoding(g, 1.0, 0.05);
    ThresholdChainSampler chain(state_from_encoding(e));
    const auto dist = postselected_distribution(g, e, 4);
    std::vector<double> chain_p, post_p;
    double norm = 0.0;
    for (const auto &[s, p] : dist) {
        std::vector<std::uint8_t> c(8, 0);
        for (int v : s) c[v] = 1;
        chain_p.push_back(chain.pattern_probability(ClickPattern(c)));
        norm += chain_p.back();
        post_p.push_back(p);
    }
    // four-click patterns whose subgraph has no perfect matching
    double outside = 0.0;
    for (const auto &p : all_patterns(8)) {
        if (p.count() != 4) continue;
        bool listed = false;
        for (const auto &[s, q] : dist) listed |= VertexSet::from_indicator(p.clicks) == s;
        if (!listed) outside += chain.pattern_probability(p);
    }
    norm += outside;
    for (double &x : chain_p) x /= norm;
    chain_p.push_back(outside / norm);
    post_p.push_back(0.0);
    EXPECT_LE(total_variation(chain_p, post_p), 0.02);
}

TEST(Postselected, errors) {
    const WeightedGraph k4 = WeightedGraph::complete(4);
    const Encoding e = build_encoding(k4, 1.0);
    EXPECT_THROW(sample_postselected(k4, e, 3, 10, 1), NumericalError);
    EXPECT_THROW(sample_postselected(k4, e, 5, 10, 1), ValidationError);
    const WeightedGraph empty(Eigen::MatrixXd::Zero(4, 4), Eigen::VectorXd::Ones(4));
    EXPECT_THROW(sample_postselected(empty, build_encoding(empty, 1.0), 2, 10, 1), NumericalError);
    const WeightedGraph big = WeightedGraph::complete(30);
    EXPECT_THROW(postselected_distribution(big, build_encoding(big, 0.0), 12), SizeError);
}

TEST(Postselected, deterministic) {
    const WeightedGraph k6 = WeightedGraph::complete(6);
    const Encoding e = build_encoding(k6, 1.0);
    EXPECT_EQ(sample_postselected(k6, e, 2, 300, 8).patterns, sample_postselected(k6, e, 2, 300, 8).patterns);
}

TEST(ClassicalBaseline, tiny_variance_is_fixed_size) {
    const SampleBatch b = classical_baseline(10, 3.0, 1e-12, 1000, 1);
    for (const auto &p : b.patterns) EXPECT_EQ(p.count(), 3);
    EXPECT_EQ(b.source, SampleSource::Classical);
    EXPECT_EQ(b.provenance.at("mean"), 3.0);
}

TEST(ClassicalBaseline, moments_of_clamped_rounded_normal) {
    const int m = 24, n = 100000;
    const double mean = 8.0, var = 72.0, sd = std::sqrt(var);
    // exact moments of clamp(round(X), 0, M)
    double em = 0.0, em2 = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double lo = k == 0 ? -INFINITY : k - 0.5, hi = k == m ? INFINITY : k + 0.5;
        const double p = normal_cdf((hi - mean) / sd) - normal_cdf((lo - mean) / sd);
        em += k * p;
        em2 += k * k * p;
    }
    const double ev = em2 - em * em;
    const ClickMoments got = estimate_moments(classical_baseline(m, mean, var, n, 3));
    EXPECT_NEAR(got.mean, em, 3 * std::sqrt(ev / n));
    EXPECT_NEAR(got.variance, ev, 3 * ev * std::sqrt(2.0 / n) * 1.5);
}

TEST(ClassicalBaseline, fixed_size_subsets_are_uniform) {
    const int m = 10, k = 4, n = 60000;
    const SampleBatch b = uniform_subsets(m, k, n, 21);
    Eigen::MatrixXd pair = Eigen::MatrixXd::Zero(m, m);
    for (const auto &p : b.patterns) {
        ASSERT_EQ(p.count(), k);
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) pair(i, j) += p.clicks[i] && p.clicks[j];
        }
    }
    const double q = static_cast<double>(k * (k - 1)) / (m * (m - 1));
    const double sigma = std::sqrt(q * (1 - q) / n);
    int outliers = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) outliers += std::abs(pair(i, j) / n - q) > 3 * sigma;
    }
    EXPECT_LE(outliers, 1);  // 45 pairs at 3 sigma
}

TEST(ClassicalBaseline, errors) {
    EXPECT_THROW(classical_baseline(10, 3.0, 0.0, 10, 1), ValidationError);
    EXPECT_THROW(classical_baseline(10, 3.0, -1.0, 10, 1), ValidationError);
    EXPECT_THROW(uniform_subsets(4, 5, 10, 1), ValidationError);
}

TEST(EstimateMoments, examples) {
    SampleBatch b;
    b.modes = 5;
    b.patterns = {ClickPattern({1, 1, 1, 0, 0}), ClickPattern({0, 1, 1, 1, 0})};
    EXPECT_EQ(estimate_moments(b).mean, 3.0);
    EXPECT_EQ(estimate_moments(b).variance, 0.0);
    b.patterns = {ClickPattern({1, 1, 0, 0, 0}), ClickPattern({1, 1, 1, 1, 0})};
    EXPECT_EQ(estimate_moments(b).mean, 3.0);
    EXPECT_EQ(estimate_moments(b).variance, 2.0);
    const SampleBatch vac = sample_threshold_chain(GaussianState::vacuum(3), 1000, 1);
    EXPECT_EQ(estimate_moments(vac).mean, 0.0);
    EXPECT_EQ(estimate_moments(vac).variance, 0.0);
    EXPECT_THROW(estimate_moments(SampleBatch{}), ValidationError);
}

TEST(BatchIo, csv_round_trip_and_sidecar) {
    const SampleBatch b = uniform_subsets(6, 3, 20, 5);
    std::stringstream csv;
    write_batch_csv(b, csv);
    EXPECT_EQ(csv.str().substr(0, 17), "bitstring,clicks\n");
    const SampleBatch back = read_batch_csv(csv);
    EXPECT_EQ(back.patterns, b.patterns);
    EXPECT_EQ(back.modes, 6);
    const auto j = batch_sidecar(b);
    EXPECT_EQ(j.at("seed"), 5u);
    EXPECT_EQ(j.at("source"), "classical");
    EXPECT_EQ(j.at("samples"), 20u);

    std::istringstream bad("bitstring,clicks\n0102,2\n");
    EXPECT_THROW(read_batch_csv(bad), ValidationError);
    std::istringstream ragged("bitstring,clicks\n01,1\n011,2\n");
    EXPECT_THROW(read_batch_csv(ragged), ValidationError);
}
