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

#include "gbsdock/docking.h"

#include <cmath>
#include <string>

#include "gbsdock/errors.h"

namespace gbsdock {

namespace {
constexpr std::array<std::string_view, kLabelCount> kLabelNames = {
    "NegativeCharge", "PositiveCharge", "HBondDonor", "HBondAcceptor", "Hydrophobe", "Aromatic"};
}

std::string_view label_name(Label label) { return kLabelNames[static_cast<int>(label)]; }

Label parse_label(std::string_view name) {
    for (int i = 0; i < kLabelCount; ++i) {
        if (kLabelNames[i] == name) return static_cast<Label>(i);
    }
    throw ValidationError("unknown pharmacophore label '" + std::string(name) + "'");
}

PotentialTable::PotentialTable(const PotentialMatrix &kappa) : kappa_(kappa) {
    if (!kappa_.allFinite()) throw ValidationError("potential table has non-finite entries");
    for (int i = 0; i < kLabelCount; ++i) {
        for (int j = 0; j < i; ++j) {
            if (kappa_(i, j) != kappa_(j, i)) {
                throw ValidationError("potential table is not symmetric at (" + std::string(label_name(kAllLabels[i])) +
                                      ", " + std::string(label_name(kAllLabels[j])) + ")");
            }
        }
    }
}

LabeledDistanceGraph build_labeled_distance_graph(std::vector<PharmacophorePoint> points) {
    if (points.empty()) throw ValidationError("labeled distance graph needs at least one point");
    const auto n = static_cast<Eigen::Index>(points.size());
    for (const auto &p : points) {
        if (!p.position.allFinite()) throw ValidationError("pharmacophore point has non-finite coordinates");
    }
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            d(i, j) = d(j, i) = (points[i].position - points[j].position).norm();
        }
    }
    return {std::move(points), std::move(d)};
}

PotentialTable reflect_potential(const PotentialMatrix &raw) {
    if (!raw.allFinite()) throw ValidationError("potential table has non-finite entries");
    if (raw != raw.transpose()) {
        throw ValidationError("raw potential must be symmetric");
    }
    // max - min - P on the table shifted to minimum zero, i.e. max - P.
    PotentialMatrix reflected = PotentialMatrix::Constant(raw.maxCoeff()) - raw;
    return PotentialTable(reflected);
}

bool is_tau_flexible(const Contact &c1, const Contact &c2, const LabeledDistanceGraph &ligand,
                     const LabeledDistanceGraph &receptor, double tau, double epsilon) {
    const double dl = ligand.distance(c1.ligand_vertex, c2.ligand_vertex);
    const double db = receptor.distance(c1.receptor_vertex, c2.receptor_vertex);
    return std::abs(dl - db) <= tau + 2.0 * epsilon;
}

BindingInteractionGraph build_binding_interaction_graph(const LabeledDistanceGraph &ligand,
                                                        const LabeledDistanceGraph &receptor,
                                                        const PotentialTable &kappa, double tau, double epsilon) {
    if (!(tau >= 0.0) || !(epsilon >= 0.0)) throw ValidationError("tau and epsilon must be non-negative");
    if (ligand.size() == 0 || receptor.size() == 0) throw ValidationError("both molecules need pharmacophore points");
    const int n = ligand.size();
    const int m = receptor.size();
    std::vector<Contact> contacts;
    contacts.reserve(static_cast<std::size_t>(n * m));
    Eigen::VectorXd w(n * m);
    for (int l = 0; l < n; ++l) {
        for (int b = 0; b < m; ++b) {
            w[l * m + b] = kappa(ligand.label(l), receptor.label(b));
            contacts.push_back({l, b});
        }
    }
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n * m, n * m);
    for (int i = 0; i < n * m; ++i) {
        for (int j = i + 1; j < n * m; ++j) {
            const Contact &ci = contacts[i];
            const Contact &cj = contacts[j];
            if (ci.ligand_vertex == cj.ligand_vertex || ci.receptor_vertex == cj.receptor_vertex) continue;
            if (is_tau_flexible(ci, cj, ligand, receptor, tau, epsilon)) adj(i, j) = adj(j, i) = 1.0;
        }
    }
    return {WeightedGraph(std::move(adj), std::move(w)), std::move(contacts), tau, epsilon};
}

}  // namespace gbsdock
