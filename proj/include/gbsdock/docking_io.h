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

#ifndef GBSDOCK_DOCKING_IO_H
#define GBSDOCK_DOCKING_IO_H

#include <iosfwd>
#include <string>

#include "gbsdock/docking.h"
#include "json.hpp"

namespace gbsdock {

struct PharmacophoreSet {
    std::string molecule;
    std::vector<PharmacophorePoint> points;
};

/// {"molecule": str, "points": [{"label": str, "xyz": [x, y, z]}, ...]}
PharmacophoreSet pharmacophores_from_json(const nlohmann::json &j);
PharmacophoreSet load_pharmacophores(const std::string &path);

/// Header row naming the six labels (optionally preceded by a corner cell),
/// then one row per label: the label followed by either the lower-triangular
/// entries up to the diagonal or all six entries. Lower-triangular input is
/// mirrored; entries given twice must agree.
PotentialTable parse_potential_csv(std::istream &in);
PotentialTable load_potential_csv(const std::string &path);

/// The knowledge-based pharmacophore potential shipped under data/.
std::string default_potential_path();

/// Graph JSON plus "tau", "epsilon" and "contacts" ([[ligand, receptor], ...]).
nlohmann::json binding_graph_to_json(const BindingInteractionGraph &big);

}  // namespace gbsdock

#endif  // GBSDOCK_DOCKING_IO_H
