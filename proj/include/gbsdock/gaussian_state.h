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

#ifndef GBSDOCK_GAUSSIAN_STATE_H
#define GBSDOCK_GAUSSIAN_STATE_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gbsdock/encoding.h"

namespace gbsdock {

/// Zero-mean M-mode Gaussian state. The covariance is 2M x 2M in (x_1..x_M,
/// p_1..p_M) ordering with the vacuum at I/2.
class GaussianState {
   public:
    /// Validates symmetry, positivity and the uncertainty relation
    /// sigma + iJ/2 >= 0 (tolerance 1e-9).
    explicit GaussianState(Eigen::MatrixXd covariance);

    static GaussianState vacuum(int modes);

    int modes() const { return static_cast<int>(covariance_.rows() / 2); }
    const Eigen::MatrixXd &covariance() const { return covariance_; }

    /// Rows/columns of sigma for the listed modes, (x..x, p..p) ordering kept.
    Eigen::MatrixXd reduced(const std::vector<int> &modes) const;

    /// Mean photon number <n_j> = (sigma_xx + sigma_pp - 1) / 2.
    double mean_photons(int mode) const;

   private:
    Eigen::MatrixXd covariance_;
};

using ComplexMatrix = Eigen::MatrixXcd;

/// Threshold detector outcome, one 0/1 entry per mode.
struct ClickPattern {
    std::vector<std::uint8_t> clicks;

    ClickPattern() = default;
    explicit ClickPattern(std::vector<std::uint8_t> c);

    int modes() const { return static_cast<int>(clicks.size()); }
    int count() const;
    std::string bitstring() const;

    friend bool operator==(const ClickPattern &, const ClickPattern &) = default;
};

/// Symplectic form J = [[0, I], [-I, 0]] in (x.., p..) ordering.
Eigen::MatrixXd symplectic_form(int modes);

/// The pure state whose kernel matrix is B (+) B: sigma is obtained from
/// (I - X A)^{-1} - I/2 in the (a, a^dagger) basis and rotated into
/// quadratures. Throws EncodingError if I - X A is singular.
GaussianState state_from_encoding(const Encoding &e);

/// Kernel matrix X [I - (sigma_c + I/2)^{-1}] in (a, a^dagger) ordering, where
/// sigma_c is sigma expressed in that basis.
ComplexMatrix kernel_matrix(const GaussianState &s);

/// Uniform loss: sigma -> eta sigma + (1 - eta) I/2, eta in (0, 1].
GaussianState apply_loss(const GaussianState &s, double eta);

/// Probability that every listed mode is empty: 1 / sqrt(det(sigma_T + I/2)).
double vacuum_probability(const GaussianState &s, const std::vector<int> &modes);

/// Threshold detection probability by inclusion-exclusion over the clicked
/// set. Exponential in the number of clicks.
double threshold_probability(const GaussianState &s, const ClickPattern &pattern);

/// Expected number of clicks, M - sum_j 1 / sqrt(det(sigma_j + I/2)).
double mean_clicks(const GaussianState &s);

/// 1 - p_vac(j) for every mode.
Eigen::VectorXd click_probabilities(const GaussianState &s);

}  // namespace gbsdock

#endif  // GBSDOCK_GAUSSIAN_STATE_H
