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

#include "gbsdock/encoding.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "gbsdock/errors.h"

namespace gbsdock {

Eigen::VectorXd raw_omega(const WeightedGraph &g, double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ValidationError("alpha must be finite and non-negative");
    return Eigen::VectorXd::Ones(g.n()) + alpha * g.weights();
}

double spectral_c_bound(const WeightedGraph &g, const Eigen::VectorXd &omega_raw) {
    if (omega_raw.size() != g.n()) throw DimensionError("omega has wrong length");
    if (!(omega_raw.array() > 0.0).all()) throw ValidationError("omega entries must be positive");
    double worst = 0.0;
    for (int j = 0; j < g.n(); ++j) {
        const int d = degree(g, j);
        if (d > 0) worst = std::max(worst, d * omega_raw[j] * omega_raw[j]);
    }
    if (worst == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (2.0 * worst);
}

Encoding encoding_from_scaled_laplacian(const Eigen::VectorXd &omega_raw, const Eigen::MatrixXd &scaled_laplacian,
                                        double alpha, double c) {
    if (!(c > 0.0 && c < 1.0)) throw ValidationError("encoding scale c must lie in (0, 1)");
    Encoding e;
    e.alpha = alpha;
    e.c = c;
    e.omega = c * omega_raw;
    e.b_matrix = (c * c) * scaled_laplacian;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e.b_matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw EncodingError("eigendecomposition of B failed");
    e.eigenvalues = solver.eigenvalues();
    const double lowest = e.eigenvalues.minCoeff();
    const double highest = e.eigenvalues.maxCoeff();
    if (lowest < -1e-9) {
        std::ostringstream msg;
        msg << "B is not positive semidefinite (eigenvalue " << lowest << ")";
        throw EncodingError(msg.str());
    }
    if (highest >= 1.0) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "c = " << c << " puts an eigenvalue of B at " << highest << " >= 1";
        throw EncodingError(msg.str());
    }
    e.eigenvalues = e.eigenvalues.cwiseMax(0.0);
    e.squeezing = e.eigenvalues.array().atanh().matrix();
    return e;
}

Encoding build_encoding(const WeightedGraph &g, double alpha, std::optional<double> target_c) {
    const Eigen::VectorXd omega0 = raw_omega(g, alpha);
    double c = 0.0;
    if (target_c) {
        c = *target_c;
    } else {
        c = spectral_c_bound(g, omega0);
        if (!std::isfinite(c)) c = 0.5;
    }
    const Eigen::MatrixXd scaled = omega0.asDiagonal() * laplacian(g) * omega0.asDiagonal();
    return encoding_from_scaled_laplacian(omega0, scaled, alpha, c);
}

nlohmann::json encoding_to_json(const Encoding &e) {
    auto vec = [](const Eigen::VectorXd &v) { return std::vector<double>(v.data(), v.data() + v.size()); };
    return {{"alpha", e.alpha},
            {"c", e.c},
            {"omega", vec(e.omega)},
            {"eigenvalues", vec(e.eigenvalues)},
            {"squeezing", vec(e.squeezing)}};
}

}  // namespace gbsdock
