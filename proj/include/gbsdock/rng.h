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

#ifndef GBSDOCK_RNG_H
#define GBSDOCK_RNG_H

#include <cstdint>
#include <random>
#include <vector>

namespace gbsdock {

/// Seedable 64-bit generator (mt19937_64) with distribution code written out
/// here, so a seed yields the same stream on every platform and standard
/// library.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, n), rejection sampled. n must be positive.
    std::uint64_t index(std::uint64_t n);
    /// Standard normal via Box-Muller (one draw per call).
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }
    /// Index drawn with probability proportional to weights[i].
    std::size_t weighted_index(const std::vector<double> &weights);

   private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer applied to seed + stream; decorrelates per-item streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace gbsdock

#endif  // GBSDOCK_RNG_H
