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

#ifndef GBSDOCK_DOCKING_H
#define GBSDOCK_DOCKING_H

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbsdock/graph.h"

namespace gbsdock {

enum class Label { NegativeCharge = 0, PositiveCharge, HBondDonor, HBondAcceptor, Hydrophobe, Aromatic };

inline constexpr int kLabelCount = 6;
inline constexpr std::array<Label, kLabelCount> kAllLabels = {Label::NegativeCharge, Label::PositiveCharge,
                                                              Label::HBondDonor,     Label::HBondAcceptor,
                                                              Label::Hydrophobe,     Label::Aromatic};

std::string_view label_name(Label label);
/// Throws ValidationError for anything outside the six known names.
Label parse_label(std::string_view name);

struct PharmacophorePoint {
    Eigen::Vector3d position;  // Angstrom
    Label label;
};

/// Complete graph over pharmacophore points, edge lengths in Angstrom.
struct LabeledDistanceGraph {
    std::vector<PharmacophorePoint> points;
    Eigen::MatrixXd edge_lengths;

    int size() const { return static_cast<int>(points.size()); }
    Label label(int i) const { return points[i].label; }
    double distance(int i, int j) const { return edge_lengths(i, j); }
};

using PotentialMatrix = Eigen::Matrix<double, kLabelCount, kLabelCount>;

/// Symmetric label-pair interaction strengths.
class PotentialTable {
   public:
    /// Throws ValidationError unless kappa is symmetric with finite entries.
    explicit PotentialTable(const PotentialMatrix &kappa);

    double operator()(Label a, Label b) const { return kappa_(static_cast<int>(a), static_cast<int>(b)); }
    const PotentialMatrix &matrix() const { return kappa_; }

   private:
    PotentialMatrix kappa_;
};

struct Contact {
    int ligand_vertex;
    int receptor_vertex;

    friend bool operator==(const Contact &, const Contact &) = default;
};

struct BindingInteractionGraph {
    WeightedGraph graph;
    std::vector<Contact> contacts;  // vertex i of graph <-> contacts[i]
    double tau;
    double epsilon;
};

inline constexpr double kDefaultTau = 1.0;      // Angstrom
inline constexpr double kDefaultEpsilon = 0.5;  // Angstrom

LabeledDistanceGraph build_labeled_distance_graph(std::vector<PharmacophorePoint> points);

/// P_refl(i, j) = max(P) - min(P) - P(i, j), extrema taken over all entries.
PotentialTable reflect_potential(const PotentialMatrix &raw);

/// |d_L(l1, l2) - d_B(b1, b2)| <= tau + 2 epsilon.
bool is_tau_flexible(const Contact &c1, const Contact &c2, const LabeledDistanceGraph &ligand,
                     const LabeledDistanceGraph &receptor, double tau, double epsilon);

/// Vertices are all ligand x receptor contacts in ligand-major order
/// (index = l * m + b), weighted by kappa on the label pair. Two contacts are
/// joined iff they are tau-flexible and share neither their ligand point nor
/// their receptor point.
BindingInteractionGraph build_binding_interaction_graph(const LabeledDistanceGraph &ligand,
                                                        const LabeledDistanceGraph &receptor,
                                                        const PotentialTable &kappa, double tau = kDefaultTau,
                                                        double epsilon = kDefaultEpsilon);

}  // namespace gbsdock

#endif  // GBSDOCK_DOCKING_H
