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


#include "gbsdock/rng.h"

#include <cmath>
#include <set>

#include "gtest/gtest.h"

using namespace gbsdock;

TEST(Rng, deterministic) {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        EXPECT_EQ(x, b.next());
        EXPECT_NE(x, c.next());
    }
}

TEST(Rng, uniform_range_and_mean) {
    Rng rng(1);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / n, 0.5, 5 * std::sqrt(1.0 / 12 / n));
}

TEST(Rng, index_is_uniform) {
    Rng rng(2);
    const int k = 7, n = 70000;
    std::vector<int> counts(k, 0);
    for (int i = 0; i < n; ++i) ++counts[rng.index(k)];
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - n / k) * (c - n / k) / static_cast<double>(n / k);
    EXPECT_LT(chi2, 22.46);  // chi-square 6 dof, p = 0.001
    EXPECT_THROW(rng.index(0), std::invalid_argument);
}

TEST(Rng, normal_moments) {
    Rng rng(3);
    const int n = 200000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal(2.0, 3.0);
        s += x;
        s2 += x * x;
    }
    const double mean = s / n, var = s2 / n - mean * mean;
    EXPECT_NEAR(mean, 2.0, 5 * 3.0 / std::sqrt(n));
    EXPECT_NEAR(var, 9.0, 5 * 9.0 * std::sqrt(2.0 / n));
}

TEST(Rng, weighted_index_proportions) {
    Rng rng(4);
    const std::vector<double> w = {0.0, 1.0, 3.0, 0.0};
    std::vector<int> counts(4, 0);
    const int n = 40000;
    for (int i = 0; i < n; ++i) ++counts[rng.weighted_index(w)];
    EXPECT_EQ(counts[0], 0);
    EXPECT_EQ(counts[3], 0);
    EXPECT_NEAR(counts[2] / static_cast<double>(n), 0.75, 5 * std::sqrt(0.75 * 0.25 / n));
    EXPECT_THROW(rng.weighted_index({0.0, 0.0}), std::invalid_argument);
}

TEST(DeriveSeed, distinct_streams) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 50; ++s) {
        for (std::uint64_t t = 0; t < 50; ++t) seen.insert(derive_seed(s, t));
    }
    EXPECT_EQ(seen.size(), 2500u);
    EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}
