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

#include "gbsdock/tuning.h"

#include <cmath>
#include <sstream>

#include "gbsdock/errors.h"

namespace gbsdock {

GaussianState device_state(const Encoding &e, double eta) {
    GaussianState s = state_from_encoding(e);
    return eta == 1.0 ? s : apply_loss(s, eta);
}

Encoding tune_c_for_clicks(const WeightedGraph &g, double alpha, double target_clicks, double eta) {
    if (!(target_clicks > 0.0 && target_clicks < g.n())) {
        throw ValidationError("target mean clicks must lie in (0, " + std::to_string(g.n()) + ")");
    }
    if (!(eta > 0.0 && eta <= 1.0)) throw ValidationError("transmissivity eta must lie in (0, 1]");
    const Eigen::VectorXd omega0 = raw_omega(g, alpha);
    const Eigen::MatrixXd scaled = omega0.asDiagonal() * laplacian(g) * omega0.asDiagonal();
    const double top = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(scaled, Eigen::EigenvaluesOnly)
                           .eigenvalues()
                           .maxCoeff();
    double c_max = top > 0.0 ? std::sqrt(kMaxTunedEigenvalue / top) : 1.0;
    c_max = std::min(c_max, 1.0 - 1e-12);

    auto clicks_at = [&](double c) {
        return mean_clicks(device_state(encoding_from_scaled_laplacian(omega0, scaled, alpha, c), eta));
    };

    const double best = clicks_at(c_max);
    if (best < target_clicks - kClickTolerance) {
        std::ostringstream msg;
        msg << "target of " << target_clicks << " mean clicks is unreachable; the largest achievable is " << best;
        throw NumericalError(msg.str());
    }

    // N[sigma(c)] is increasing in c; the bracket is checked at every step.
    double lo = 0.0, hi = c_max;
    double n_lo = 0.0, n_hi = best;
    double c = c_max;
    double n_c = best;
    for (int iter = 0; iter < 200 && std::abs(n_c - target_clicks) > 1e-10; ++iter) {
        c = 0.5 * (lo + hi);
        if (c <= 0.0) break;
        n_c = clicks_at(c);
        if (n_c < n_lo - 1e-12 || n_c > n_hi + 1e-12) {
            throw NumericalError("mean clicks are not monotone in c; line search aborted");
        }
        if (n_c < target_clicks) {
            lo = c;
            n_lo = n_c;
        } else {
            hi = c;
            n_hi = n_c;
        }
    }
    if (std::abs(n_c - target_clicks) > kClickTolerance) {
        std::ostringstream msg;
        msg << "line search stopped at " << n_c << " mean clicks for target " << target_clicks;
        throw NumericalError(msg.str());
    }
    return encoding_from_scaled_laplacian(omega0, scaled, alpha, c);
}

}  // namespace gbsdock
