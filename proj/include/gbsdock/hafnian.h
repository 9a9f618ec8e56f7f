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

#ifndef GBSDOCK_HAFNIAN_H
#define GBSDOCK_HAFNIAN_H

#include <Eigen/Dense>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "gbsdock/errors.h"

namespace gbsdock {

inline constexpr int kHafnianMaxDimension = 24;

namespace detail {

// Expansion along the lowest remaining index: Haf(S) = sum_j A(i, j) Haf(S \ {i, j}).
template <typename Scalar>
class HafnianExpansion {
   public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    HafnianExpansion(const Matrix &a, bool memoize) : a_(a), memoize_(memoize) {}

    Scalar operator()(std::uint32_t remaining) {
        if (remaining == 0) return Scalar(1);
        if (memoize_) {
            if (auto it = cache_.find(remaining); it != cache_.end()) return it->second;
        }
        const int i = std::countr_zero(remaining);
        const std::uint32_t rest = remaining & (remaining - 1);
        Scalar total(0);
        for (std::uint32_t candidates = rest; candidates; candidates &= candidates - 1) {
            const int j = std::countr_zero(candidates);
            const Scalar aij = a_(i, j);
            if (aij == Scalar(0)) continue;
            total += aij * (*this)(rest & ~(std::uint32_t{1} << j));
        }
        if (memoize_) cache_.emplace(remaining, total);
        return total;
    }

   private:
    const Matrix &a_;
    bool memoize_;
    std::unordered_map<std::uint32_t, Scalar> cache_;
};

}  // namespace detail

/// Hafnian of a symmetric matrix of even dimension: the sum over perfect
/// matchings of the product of matched entries. Diagonal entries never enter.
/// Haf of the 0x0 matrix is 1.
template <typename Derived>
typename Derived::Scalar hafnian(const Eigen::MatrixBase<Derived> &a) {
    using Scalar = typename Derived::Scalar;
    if (a.rows() != a.cols()) throw DimensionError("hafnian needs a square matrix");
    if (a.rows() % 2 != 0) throw DimensionError("hafnian of odd dimension " + std::to_string(a.rows()));
    if (a.rows() > kHafnianMaxDimension) {
        throw SizeError("hafnian dimension " + std::to_string(a.rows()) + " exceeds " +
                        std::to_string(kHafnianMaxDimension));
    }
    const int n = static_cast<int>(a.rows());
    const typename detail::HafnianExpansion<Scalar>::Matrix dense = a;
    // Small cases are cheaper without the cache; the recursion is the same.
    detail::HafnianExpansion<Scalar> expand(dense, n > 12);
    return expand(n == 0 ? 0u : (n == 32 ? ~0u : (std::uint32_t{1} << n) - 1));
}

/// Number of perfect matchings of the complete graph on 2n vertices,
/// (2n)! / (n! 2^n) = (2n - 1)!!.
inline double complete_graph_hafnian(int n) {
    double h = 1.0;
    for (int k = 2 * n - 1; k > 1; k -= 2) h *= k;
    return h;
}

}  // namespace gbsdock

#endif  // GBSDOCK_HAFNIAN_H
