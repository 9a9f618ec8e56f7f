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


#include "gbsdock/stats.h"

#include "gbsdock/errors.h"
#include "gtest/gtest.h"

using namespace gbsdock;

TEST(Wilson, reference_values) {
    const Interval half = wilson_interval(5, 10);
    EXPECT_NEAR(half.lower, 0.2366, 1e-4);
    EXPECT_NEAR(half.upper, 0.7634, 1e-4);
    const Interval none = wilson_interval(0, 10);
    EXPECT_EQ(none.lower, 0.0);
    EXPECT_NEAR(none.upper, 0.2775, 1e-4);
    const Interval all = wilson_interval(10, 10);
    EXPECT_NEAR(all.lower, 0.7225, 1e-4);
    EXPECT_NEAR(all.upper, 1.0, 1e-12);
}

TEST(Wilson, contains_point_estimate_and_narrows) {
    for (long long n : {10LL, 100LL, 10000LL}) {
        const Interval i = wilson_interval(n / 10, n);
        EXPECT_TRUE(i.contains(0.1));
    }
    EXPECT_LT(wilson_interval(1000, 10000).upper - wilson_interval(1000, 10000).lower,
              wilson_interval(10, 100).upper - wilson_interval(10, 100).lower);
}

TEST(Wilson, errors) {
    EXPECT_THROW(wilson_interval(1, 0), ValidationError);
    EXPECT_THROW(wilson_interval(3, 2), ValidationError);
    EXPECT_THROW(wilson_interval(-1, 2), ValidationError);
}

TEST(Interval, overlap) {
    EXPECT_TRUE((Interval{0.1, 0.3}).overlaps({0.3, 0.5}));
    EXPECT_FALSE((Interval{0.1, 0.2}).overlaps({0.25, 0.5}));
}

TEST(TotalVariation, examples) {
    EXPECT_DOUBLE_EQ(total_variation({0.5, 0.5}, {1.0, 0.0}), 0.5);
    EXPECT_EQ(total_variation({0.2, 0.8}, {0.2, 0.8}), 0.0);
    EXPECT_THROW(total_variation({1.0}, {0.5, 0.5}), DimensionError);
}
