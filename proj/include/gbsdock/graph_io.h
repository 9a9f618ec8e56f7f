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

#ifndef GBSDOCK_GRAPH_IO_H
#define GBSDOCK_GRAPH_IO_H

#include <iosfwd>
#include <string>

#include "gbsdock/graph.h"
#include "json.hpp"

namespace gbsdock {

/// {"n": int, "edges": [[i, j], ...], "weights": [float, ...]}
nlohmann::json graph_to_json(const WeightedGraph &g);
WeightedGraph graph_from_json(const nlohmann::json &j);

WeightedGraph load_graph(const std::string &path);
void save_graph(const WeightedGraph &g, const std::string &path);

/// DIMACS "p edge" format with 1-based vertices. Vertex weights travel as
/// comment lines of the form "c w <vertex> <weight>".
void write_dimacs(const WeightedGraph &g, std::ostream &out);

}  // namespace gbsdock

#endif  // GBSDOCK_GRAPH_IO_H
