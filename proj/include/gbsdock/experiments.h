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


#ifndef GBSDOCK_EXPERIMENTS_H
#define GBSDOCK_EXPERIMENTS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbsdock/graph.h"
#include "gbsdock/planted.h"
#include "gbsdock/solvers.h"
#include "json.hpp"

namespace gbsdock {

enum class InstanceSource { Planted, Graph, Pharmacophore };

std::string instance_source_name(InstanceSource s);
InstanceSource parse_instance_source(const std::string &name);

struct ExperimentConfig {
    InstanceSource source = InstanceSource::Planted;
    PlantedParams planted;
    std::string graph_path;     // source = graph
    std::string ligand_path;    // source = pharmacophore
    std::string receptor_path;
    std::string potential_path;  // empty: shipped table
    double tau = 1.0;
    double epsilon = 0.5;

    double alpha = 1.0;
    double target_clicks = 8.0;
    double eta = 1.0;        // transmissivity of the main runs
    double noise_eta = 0.8;  // lossy arm of the noise study
    int postselect_clicks = 8;

    int random_search_samples = 100000;
    int shrink_samples = 10000;
    int max_steps = 20;
    GrowRule grow_rule = GrowRule::WeightProportional;

    std::uint64_t seed = 1;
    std::string out_dir = "out";
    int threads = 1;  // does not affect results

    /// Throws ValidationError when a knob is outside the downstream guards.
    void validate() const;
};

nlohmann::json config_to_json(const ExperimentConfig &c);
ExperimentConfig config_from_json(const nlohmann::json &j);
ExperimentConfig load_config(const std::string &path);

/// FNV-1a over the canonical JSON dump, as 16 hex digits.
std::string config_hash(const ExperimentConfig &c);

struct Instance {
    WeightedGraph graph;
    std::optional<VertexSet> planted;
    VertexSet optimum;  // brute-force maximum-weight clique
    double optimum_weight = 0.0;
};

Instance resolve_instance(const ExperimentConfig &c);

struct Table {
    std::string name;  // file stem
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct RunOutput {
    std::string name;
    std::vector<Table> tables;
    nlohmann::json summary;
};

// Sample counts used by each runner: fig3 uses random_search_samples per
// source, the others use shrink_samples per source.
RunOutput run_figure3(const ExperimentConfig &c);
RunOutput run_figure4(const ExperimentConfig &c);
RunOutput run_figure5_6(const ExperimentConfig &c);
RunOutput run_noise_study(const ExperimentConfig &c);

std::string format_number(double x);
void write_table_csv(const Table &t, std::ostream &out);
/// Writes every table as <out_dir>/<table>.csv and the summary as
/// <out_dir>/<name>.json. Returns the paths written.
std::vector<std::string> write_run(const RunOutput &run, const std::string &out_dir);
/// Plain-text gnuplot script for the run's main table.
std::string gnuplot_script(const RunOutput &run);

}  // namespace gbsdock

#endif  // GBSDOCK_EXPERIMENTS_H
