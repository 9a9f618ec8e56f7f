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


#include "gbsdock/experiments.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gbsdock/docking_io.h"
#include "gbsdock/errors.h"
#include "gbsdock/graph_io.h"
#include "gtest/gtest.h"

using namespace gbsdock;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.planted.n = 12;
    c.planted.clique_size = 4;
    c.planted.edge_density = 0.2;
    c.planted.decoy_cliques = 1;
    c.target_clicks = 4.0;
    c.postselect_clicks = 4;
    c.random_search_samples = 300;
    c.shrink_samples = 200;
    c.max_steps = 5;
    c.seed = 3;
    return c;
}

std::string csv_of(const Table &t) {
    std::ostringstream s;
    write_table_csv(t, s);
    return s.str();
}

std::filesystem::path scratch_dir(const std::string &name) {
    auto p = std::filesystem::temp_directory_path() / ("gbsdock_exp_" + name);
    std::filesystem::remove_all(p);
    return p;
}

}  // namespace

TEST(Config, json_round_trip_and_hash) {
    ExperimentConfig c = small_config();
    c.grow_rule = GrowRule::MaxWeight;
    c.noise_eta = 0.7;
    c.threads = 4;
    const ExperimentConfig d = config_from_json(config_to_json(c));
    EXPECT_EQ(config_to_json(d), config_to_json(c));
    EXPECT_EQ(config_hash(d), config_hash(c));
    EXPECT_EQ(config_hash(c).size(), 16u);
    ExperimentConfig e = c;
    e.seed = 4;
    EXPECT_NE(config_hash(e), config_hash(c));
}

TEST(Config, partial_json_keeps_defaults) {
    const ExperimentConfig c = config_from_json(nlohmann::json{{"seed", 9}, {"max_steps", 3}});
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.max_steps, 3);
    EXPECT_EQ(c.target_clicks, 8.0);
    EXPECT_EQ(c.planted.n, 24);
    EXPECT_THROW(config_from_json(nlohmann::json::array()), ValidationError);
    EXPECT_THROW(config_from_json(nlohmann::json{{"seed", "x"}}), ValidationError);
    EXPECT_THROW(config_from_json(nlohmann::json{{"grow_rule", "best"}}), ValidationError);
}

TEST(Config, shipped_example_loads) {
    const ExperimentConfig c = load_config(std::string(GBSDOCK_DATA_DIR) + "/example_config.json");
    EXPECT_NO_THROW(c.validate());
    EXPECT_THROW(load_config("/nonexistent/config.json"), ValidationError);
}

TEST(Config, validation) {
    auto bad = [](auto mutate) {
        ExperimentConfig c;
        mutate(c);
        return c;
    };
    EXPECT_THROW(bad([](ExperimentConfig &c) { c.source = InstanceSource::Graph; }).validate(), ValidationError);
    EXPECT_THROW(bad([](ExperimentConfig &c) { c.source = InstanceSource::Pharmacophore; }).validate(),
                 ValidationError);
    EXPECT_THROW(bad([](ExperimentConfig &c) { c.tau = -1; }).validate(), ValidationError);
    EXPECT_THROW(bad([](ExperimentConfig &c) { c.target_clicks = 0; }).validate(), ValidationError);
    EXPECT_THROW(bad([](ExperimentConfig &c) { c.eta = 0; }).validate(), ValidationError);
    EXPECT_THROW(bad([](ExperimentConfig &c) { c.noise_eta = 1.5; }).validate(), ValidationError);
    EXPECT_THROW(bad([](ExperimentConfig &c) { c.shrink_samples = 0; }).validate(), ValidationError);
    EXPECT_THROW(bad([](ExperimentConfig &c) { c.max_steps = -1; }).validate(), ValidationError);
    EXPECT_THROW(bad([](ExperimentConfig &c) { c.threads = 0; }).validate(), ValidationError);
    EXPECT_THROW(parse_instance_source("file"), ValidationError);
    EXPECT_EQ(parse_instance_source(instance_source_name(InstanceSource::Pharmacophore)),
              InstanceSource::Pharmacophore);
}

TEST(Instance, planted_source_optimum_is_planted) {
    const Instance inst = resolve_instance(small_config());
    ASSERT_TRUE(inst.planted);
    EXPECT_EQ(inst.optimum, *inst.planted);
    EXPECT_DOUBLE_EQ(inst.optimum_weight, clique_weight(inst.graph, inst.optimum));
}

TEST(Instance, graph_and_pharmacophore_sources) {
    const auto dir = scratch_dir("inst");
    std::filesystem::create_directories(dir);
    const WeightedGraph k4 = WeightedGraph::complete(4);
    const std::string path = (dir / "k4.json").string();
    save_graph(k4, path);
    ExperimentConfig c;
    c.source = InstanceSource::Graph;
    c.graph_path = path;
    const Instance g = resolve_instance(c);
    EXPECT_FALSE(g.planted);
    EXPECT_EQ(g.optimum, VertexSet::all(4));

    c.source = InstanceSource::Pharmacophore;
    c.ligand_path = std::string(GBSDOCK_DATA_DIR) + "/example_ligand.json";
    c.receptor_path = std::string(GBSDOCK_DATA_DIR) + "/example_receptor.json";
    const Instance p = resolve_instance(c);
    EXPECT_EQ(p.graph.n(), 24);
    EXPECT_TRUE(is_clique(p.graph, p.optimum));
    std::filesystem::remove_all(dir);
}

TEST(Runners, deterministic_tables) {
    const ExperimentConfig c = small_config();
    for (auto runner : {&run_figure3, &run_figure4, &run_figure5_6, &run_noise_study}) {
        const RunOutput a = runner(c);
        ExperimentConfig threaded = c;
        threaded.threads = 3;
        const RunOutput b = runner(threaded);
        ASSERT_EQ(a.tables.size(), b.tables.size());
        for (std::size_t i = 0; i < a.tables.size(); ++i) EXPECT_EQ(csv_of(a.tables[i]), csv_of(b.tables[i]));
        EXPECT_EQ(a.summary.at("seed"), 3u);
        EXPECT_EQ(a.summary.at("config_hash"), config_hash(c));
    }
}

TEST(Runners, curve_tables_are_monotone) {
    const RunOutput r = run_figure5_6(small_config());
    const Table &t = r.tables.front();
    ASSERT_EQ(t.rows.size(), 6u);
    EXPECT_EQ(t.columns[0], "k");
    for (std::size_t col = 1; col < t.columns.size(); ++col) {
        if (t.columns[col].find("_hits") == std::string::npos) continue;
        for (std::size_t k = 1; k < t.rows.size(); ++k) {
            EXPECT_GE(std::stoll(t.rows[k][col]), std::stoll(t.rows[k - 1][col]));
        }
    }
}

TEST(Runners, shrink_histogram_fractions) {
    const RunOutput r = run_figure4(small_config());
    const Table &t = r.tables.front();
    double gbs_total = 0.0;
    for (const auto &row : t.rows) {
        if (row[0] == "gbs") gbs_total += std::stod(row[4]);
        EXPECT_EQ(row[5], std::stod(row[4]) >= 0.005 ? "1" : "0");
    }
    EXPECT_NEAR(gbs_total, 1.0, 1e-6);
    const auto &ci = r.summary["sources"]["gbs"]["success_ci"];
    EXPECT_LE(ci[0].get<double>(), r.summary["sources"]["gbs"]["success_rate"].get<double>());
}

TEST(Runners, write_run_and_gnuplot) {
    const RunOutput r = run_figure3(small_config());
    const auto dir = scratch_dir("write");
    const auto paths = write_run(r, dir.string());
    ASSERT_EQ(paths.size(), 2u);
    for (const auto &p : paths) EXPECT_TRUE(std::filesystem::exists(p));
    std::ifstream f(dir / "fig3.json");
    const auto j = nlohmann::json::parse(f);
    EXPECT_EQ(j.at("version"), GBSDOCK_VERSION);
    EXPECT_EQ(j.at("tables")[0], "fig3_cliques.csv");
    EXPECT_EQ(config_from_json(j.at("config")).seed, 3u);
    const std::string script = gnuplot_script(r);
    EXPECT_NE(script.find("fig3_cliques.csv"), std::string::npos);
    EXPECT_NE(gnuplot_script(run_figure5_6(small_config())).find("gbs"), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Format, numbers) {
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.3333333333");
    EXPECT_EQ(format_number(3.0), "3");
}
