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

#include "gbsdock/docking_io.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "gbsdock/errors.h"
#include "gbsdock/graph_io.h"

namespace gbsdock {

PharmacophoreSet pharmacophores_from_json(const nlohmann::json &j) {
    PharmacophoreSet out;
    try {
        out.molecule = j.value("molecule", std::string{});
        for (const auto &p : j.at("points")) {
            const auto xyz = p.at("xyz").get<std::vector<double>>();
            if (xyz.size() != 3) throw ValidationError("pharmacophore point needs exactly 3 coordinates");
            out.points.push_back({Eigen::Vector3d(xyz[0], xyz[1], xyz[2]), parse_label(p.at("label").get<std::string>())});
        }
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("pharmacophore JSON: ") + e.what());
    }
    if (out.points.empty()) throw ValidationError("pharmacophore JSON has no points");
    return out;
}

PharmacophoreSet load_pharmacophores(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open pharmacophore file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(path + ": " + e.what());
    }
    return pharmacophores_from_json(j);
}

namespace {

std::vector<std::string> split_cells(const std::string &line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        const auto first = cell.find_first_not_of(" \t\r");
        const auto last = cell.find_last_not_of(" \t\r");
        cells.push_back(first == std::string::npos ? std::string{} : cell.substr(first, last - first + 1));
    }
    return cells;
}

double parse_number(const std::string &cell) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(cell, &used);
    } catch (const std::exception &) {
        throw ValidationError("potential CSV: '" + cell + "' is not a number");
    }
    if (used != cell.size() || !std::isfinite(v)) throw ValidationError("potential CSV: bad entry '" + cell + "'");
    return v;
}

}  // namespace

PotentialTable parse_potential_csv(std::istream &in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
        rows.push_back(split_cells(line));
    }
    if (rows.size() != kLabelCount + 1) {
        throw ValidationError("potential CSV: expected a header and 6 rows, got " + std::to_string(rows.size()) + " rows");
    }
    auto header = rows[0];
    if (header.size() == kLabelCount + 1) header.erase(header.begin());
    if (header.size() != kLabelCount) throw ValidationError("potential CSV: header must name the 6 labels");
    std::array<int, kLabelCount> column{};
    std::array<bool, kLabelCount> seen{};
    for (int c = 0; c < kLabelCount; ++c) {
        column[c] = static_cast<int>(parse_label(header[c]));
        if (seen[column[c]]) throw ValidationError("potential CSV: duplicate header label " + header[c]);
        seen[column[c]] = true;
    }

    PotentialMatrix kappa = PotentialMatrix::Constant(std::nan(""));
    auto put = [&](int i, int j, double v) {
        for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
            if (!std::isnan(kappa(a, b)) && kappa(a, b) != v) {
                throw ValidationError("potential CSV: conflicting values for (" + std::string(label_name(kAllLabels[a])) +
                                      ", " + std::string(label_name(kAllLabels[b])) + ")");
            }
            kappa(a, b) = v;
        }
    };
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto &cells = rows[r];
        if (cells.empty()) continue;
        const int row_label = static_cast<int>(parse_label(cells[0]));
        int row_pos = -1;
        for (int c = 0; c < kLabelCount; ++c) {
            if (column[c] == row_label) row_pos = c;
        }
        std::size_t count = cells.size() - 1;
        while (count > 0 && cells[count].empty()) --count;  // trailing empty cells of a triangle
        if (count != static_cast<std::size_t>(row_pos + 1) && count != kLabelCount) {
            throw ValidationError("potential CSV: row " + cells[0] + " has " + std::to_string(count) + " entries");
        }
        for (std::size_t c = 0; c < count; ++c) put(row_label, column[c], parse_number(cells[c + 1]));
    }
    if (kappa.hasNaN()) throw ValidationError("potential CSV: table is incomplete");
    return PotentialTable(kappa);
}

PotentialTable load_potential_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open potential file " + path);
    return parse_potential_csv(in);
}

std::string default_potential_path() { return std::string(GBSDOCK_DATA_DIR) + "/knowledge_based_potential.csv"; }

nlohmann::json binding_graph_to_json(const BindingInteractionGraph &big) {
    auto j = graph_to_json(big.graph);
    j["tau"] = big.tau;
    j["epsilon"] = big.epsilon;
    nlohmann::json contacts = nlohmann::json::array();
    for (const auto &c : big.contacts) contacts.push_back({c.ligand_vertex, c.receptor_vertex});
    j["contacts"] = std::move(contacts);
    return j;
}

}  // namespace gbsdock
