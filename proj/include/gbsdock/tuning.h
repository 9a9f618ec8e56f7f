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

#ifndef GBSDOCK_TUNING_H
#define GBSDOCK_TUNING_H

#include "gbsdock/encoding.h"
#include "gbsdock/gaussian_state.h"

namespace gbsdock {

inline constexpr double kClickTolerance = 1e-3;
/// Largest admissible eigenvalue of B during tuning.
inline constexpr double kMaxTunedEigenvalue = 1.0 - 1e-6;

/// The state the simulated device emits for an encoding under uniform loss.
GaussianState device_state(const Encoding &e, double eta = 1.0);

/// Bisection on the scale c so that the (lossy) device state has
/// target_clicks expected clicks, to within kClickTolerance. Throws
/// ValidationError for a target outside (0, M) and NumericalError, quoting the
/// largest achievable mean, if the target needs an eigenvalue of B above
/// kMaxTunedEigenvalue.
Encoding tune_c_for_clicks(const WeightedGraph &g, double alpha, double target_clicks, double eta = 1.0);

}  // namespace gbsdock

#endif  // GBSDOCK_TUNING_H
