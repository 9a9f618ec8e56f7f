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

#ifndef GBSDOCK_STATS_H
#define GBSDOCK_STATS_H

#include <vector>

namespace gbsdock {

struct Interval {
    double lower;
    double upper;

    bool overlaps(const Interval &o) const { return lower <= o.upper && o.lower <= upper; }
    bool contains(double x) const { return lower <= x && x <= upper; }
};

/// Wilson score interval for a binomial proportion; z = 1.959964 gives 95%.
Interval wilson_interval(long long successes, long long trials, double z = 1.959963984540054);

/// Total variation distance 0.5 * sum |p - q| between two vectors of the same
/// length.
double total_variation(const std::vector<double> &p, const std::vector<double> &q);

}  // namespace gbsdock

#endif  // GBSDOCK_STATS_H
