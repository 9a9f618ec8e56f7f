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

#ifndef GBSDOCK_ENCODING_H
#define GBSDOCK_ENCODING_H

#include <Eigen/Dense>
#include <optional>

#include "gbsdock/graph.h"
#include "json.hpp"

namespace gbsdock {

/// Device program for a vertex-weighted graph: B = Omega (D - A) Omega with
/// Omega_ii = c (1 + alpha w_i). B is real symmetric PSD, so its Takagi values
/// are its eigenvalues and squeezing_j = atanh(eigenvalue_j).
struct Encoding {
    Eigen::VectorXd omega;
    double alpha = 0.0;
    double c = 0.0;
    Eigen::MatrixXd b_matrix;
    Eigen::VectorXd eigenvalues;  // ascending, all in [0, 1)
    Eigen::VectorXd squeezing;

    int modes() const { return static_cast<int>(omega.size()); }
};

/// 1 + alpha w_i, the weight profile before the overall scale c.
Eigen::VectorXd raw_omega(const WeightedGraph &g, double alpha);

/// Largest c with 2 max_j d_j omega_j^2 <= 1 / c, which bounds the spectrum of
/// c^2 Omega0 (D - A) Omega0 by c. Vertices of degree zero are left out of the
/// maximum; an edgeless graph gives +infinity.
double spectral_c_bound(const WeightedGraph &g, const Eigen::VectorXd &omega_raw);

/// Builds the encoding. With no target_c the scale is the spectral bound
/// (1/2 for an edgeless graph). Throws EncodingError when B ends up with an
/// eigenvalue >= 1, ValidationError for alpha < 0 or c outside (0, 1).
Encoding build_encoding(const WeightedGraph &g, double alpha, std::optional<double> target_c = std::nullopt);

/// Same as build_encoding, from an already computed Omega0 (D - A) Omega0.
Encoding encoding_from_scaled_laplacian(const Eigen::VectorXd &omega_raw, const Eigen::MatrixXd &scaled_laplacian,
                                        double alpha, double c);

nlohmann::json encoding_to_json(const Encoding &e);

}  // namespace gbsdock

#endif  // GBSDOCK_ENCODING_H
