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


// gbsdock command-line interface.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gbsdock/docking.h"
#include "gbsdock/docking_io.h"
#include "gbsdock/encoding.h"
#include "gbsdock/errors.h"
#include "gbsdock/experiments.h"
#include "gbsdock/graph_io.h"
#include "gbsdock/rng.h"
#include "gbsdock/sampling.h"
#include "gbsdock/solvers.h"
#include "gbsdock/tuning.h"

namespace fs = std::filesystem;
using namespace gbsdock;

namespace {

struct Globals {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<int> samples;
    std::optional<int> threads;
};

ExperimentConfig effective_config(const Globals &g) {
    ExperimentConfig c = g.config_path.empty() ? ExperimentConfig{} : load_config(g.config_path);
    if (g.seed) c.seed = *g.seed;
    if (g.out_dir) c.out_dir = *g.out_dir;
    if (g.samples) {
        c.random_search_samples = *g.samples;
        c.shrink_samples = *g.samples;
    }
    if (g.threads) c.threads = *g.threads;
    c.validate();
    return c;
}

WeightedGraph graph_or_instance(const std::string &graph_path, const ExperimentConfig &c) {
    if (!graph_path.empty()) return load_graph(graph_path);
    return resolve_instance(c).graph;
}

void write_json(const nlohmann::json &j, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write '" + path + "'");
    f << j.dump(2) << '\n';
}

std::string in_out_dir(const ExperimentConfig &c, const std::string &file) {
    std::error_code ec;
    fs::create_directories(c.out_dir, ec);
    if (ec) throw ValidationError("cannot create output directory '" + c.out_dir + "'");
    return (fs::path(c.out_dir) / file).string();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Molecular docking as weighted clique search with a simulated Gaussian boson sampler"};
    app.set_version_flag("--version", std::string(GBSDOCK_VERSION));
    app.require_subcommand(1);

    Globals g;
    app.add_option("--config", g.config_path, "experiment config (JSON)")->check(CLI::ExistingFile);
    app.add_option("--seed", g.seed, "base seed");
    app.add_option("--out-dir", g.out_dir, "output directory");
    app.add_option("--samples", g.samples, "sample count override")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
    app.fallthrough();

    // build-graph
    auto *build = app.add_subcommand("build-graph", "pharmacophore JSON -> binding interaction graph JSON");
    std::string ligand, receptor, potential, build_out;
    double tau = kDefaultTau, epsilon = kDefaultEpsilon;
    build->add_option("--ligand", ligand, "ligand pharmacophores")->required()->check(CLI::ExistingFile);
    build->add_option("--receptor", receptor, "receptor pharmacophores")->required()->check(CLI::ExistingFile);
    build->add_option("--potential", potential, "potential table CSV (default: shipped table)");
    build->add_option("--tau", tau, "flexibility constant (Angstrom)");
    build->add_option("--epsilon", epsilon, "interaction distance (Angstrom)");
    build->add_option("-o,--output", build_out, "output file (default stdout)");

    // gen-instance
    auto *gen = app.add_subcommand("gen-instance", "generate a planted benchmark instance");
    std::string gen_out;
    std::optional<double> density;
    std::optional<int> clique_size, decoys, vertices;
    std::optional<std::string> profile;
    gen->add_option("--density", density, "background edge density");
    gen->add_option("--clique-size", clique_size, "planted clique size");
    gen->add_option("--vertices", vertices, "vertex count");
    gen->add_option("--decoys", decoys, "decoy cliques");
    gen->add_option("--profile", profile, "weight profile (heavy-core|uniform-light)");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // tune
    auto *tune = app.add_subcommand("tune", "tune the encoding scale c to a target mean click count");
    std::string tune_graph;
    std::optional<double> tune_target, tune_eta, tune_alpha;
    tune->add_option("--graph", tune_graph, "graph JSON (default: configured instance)");
    tune->add_option("--target", tune_target, "target mean clicks");
    tune->add_option("--eta", tune_eta, "transmissivity");
    tune->add_option("--alpha", tune_alpha, "weight coupling");

    // sample
    auto *sample = app.add_subcommand("sample", "draw click patterns");
    std::string sample_graph, sample_source = "gbs";
    int postselect = 0;
    sample->add_option("--graph", sample_graph, "graph JSON (default: configured instance)");
    sample->add_option("--source", sample_source, "gbs|postselected|classical")
        ->check(CLI::IsMember({"gbs", "postselected", "classical"}));
    sample->add_option("--clicks", postselect, "post-selected click number (default: config)");

    // solve
    auto *solve = app.add_subcommand("solve", "greedy shrinking + local search on a sample batch");
    std::string solve_graph, solve_batch;
    std::optional<int> solve_steps;
    solve->add_option("--graph", solve_graph, "graph JSON (default: configured instance)");
    solve->add_option("--batch", solve_batch, "sample CSV (default: fresh GBS samples)");
    solve->add_option("--max-steps", solve_steps, "local-search steps");

    // bench
    auto *bench = app.add_subcommand("bench", "figure analogue campaigns");
    std::string which;
    bool gnuplot = false;
    bench->add_option("figure", which, "fig3|fig4|fig56|noise")
        ->required()
        ->check(CLI::IsMember({"fig3", "fig4", "fig56", "noise"}));
    bench->add_flag("--emit-gnuplot", gnuplot, "also write a gnuplot script");

    // oracle
    auto *oracle = app.add_subcommand("oracle", "brute-force maximum-weight clique");
    std::string oracle_graph;
    oracle->add_option("--graph", oracle_graph, "graph JSON (default: configured instance)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build) {
            const auto l = build_labeled_distance_graph(load_pharmacophores(ligand).points);
            const auto r = build_labeled_distance_graph(load_pharmacophores(receptor).points);
            const auto kappa = load_potential_csv(potential.empty() ? default_potential_path() : potential);
            write_json(binding_graph_to_json(build_binding_interaction_graph(l, r, kappa, tau, epsilon)), build_out);
            return 0;
        }

        ExperimentConfig c = effective_config(g);

        if (*gen) {
            PlantedParams p = c.planted;
            if (g.seed) p.seed = *g.seed;
            if (density) p.edge_density = *density;
            if (clique_size) p.clique_size = *clique_size;
            if (vertices) p.n = *vertices;
            if (decoys) p.decoy_cliques = *decoys;
            if (profile) p.weight_profile = parse_profile(*profile);
            const PlantedInstance inst = generate_planted_instance(p);
            nlohmann::json j = graph_to_json(inst.graph);
            j["planted_clique"] = inst.planted_clique.members();
            j["planted_weight"] = clique_weight(inst.graph, inst.planted_clique);
            j["generator"] = planted_params_to_json(p);
            j["attempts"] = inst.attempts;
            write_json(j, gen_out);
            return 0;
        }

        if (*tune) {
            const WeightedGraph graph = graph_or_instance(tune_graph, c);
            const double eta = tune_eta.value_or(c.eta);
            const Encoding e = tune_c_for_clicks(graph, tune_alpha.value_or(c.alpha),
                                                 tune_target.value_or(c.target_clicks), eta);
            nlohmann::json j = encoding_to_json(e);
            j["eta"] = eta;
            j["mean_clicks"] = mean_clicks(device_state(e, eta));
            write_json(j, "-");
            return 0;
        }

        if (*sample) {
            const WeightedGraph graph = graph_or_instance(sample_graph, c);
            SampleBatch batch;
            if (sample_source == "postselected") {
                const Encoding e = build_encoding(graph, c.alpha);
                batch = sample_postselected(graph, e, postselect > 0 ? postselect : c.postselect_clicks,
                                            c.shrink_samples, c.seed);
            } else {
                const Encoding e = tune_c_for_clicks(graph, c.alpha, c.target_clicks, c.eta);
                batch = sample_threshold_chain(device_state(e, c.eta), c.shrink_samples, c.seed, c.threads);
                if (sample_source == "classical") {
                    const ClickMoments m = estimate_moments(batch);
                    batch = classical_baseline(graph.n(), m.mean, m.variance, c.shrink_samples,
                                               derive_seed(c.seed, 2));
                }
            }
            const std::string csv = in_out_dir(c, "samples_" + sample_source + ".csv");
            std::ofstream f(csv, std::ios::binary);
            write_batch_csv(batch, f);
            write_json(batch_sidecar(batch), in_out_dir(c, "samples_" + sample_source + ".json"));
            std::cout << csv << '\n';
            return 0;
        }

        if (*solve) {
            const WeightedGraph graph = graph_or_instance(solve_graph, c);
            SampleBatch batch;
            if (!solve_batch.empty()) {
                std::ifstream f(solve_batch);
                if (!f) throw ValidationError("cannot open '" + solve_batch + "'");
                batch = read_batch_csv(f);
            } else {
                const Encoding e = tune_c_for_clicks(graph, c.alpha, c.target_clicks, c.eta);
                batch = sample_threshold_chain(device_state(e, c.eta), c.shrink_samples, c.seed, c.threads);
            }
            const int steps = solve_steps.value_or(c.max_steps);
            std::optional<double> opt;
            if (graph.n() <= kBruteForceMaxVertices) opt = clique_weight(graph, max_weighted_clique_bruteforce(graph));
            const SolveResult r = hybrid_pipeline(graph, batch, steps, derive_seed(c.seed, 5), opt, c.grow_rule,
                                                  c.threads);
            nlohmann::json j = {{"best_clique", r.best_clique.members()},
                                {"best_weight", r.best_weight},
                                {"usable_samples", r.usable_samples}};
            if (opt) {
                j["optimum_weight"] = *opt;
                j["success_curve"] = r.success_curve;
                const std::string csv = in_out_dir(c, "solve_records.csv");
                std::ofstream f(csv, std::ios::binary);
                write_solve_csv(r, f);
                j["records_csv"] = csv;
            }
            write_json(j, "-");
            return 0;
        }

        if (*bench) {
            RunOutput run = which == "fig3"    ? run_figure3(c)
                            : which == "fig4"  ? run_figure4(c)
                            : which == "fig56" ? run_figure5_6(c)
                                               : run_noise_study(c);
            auto written = write_run(run, c.out_dir);
            if (gnuplot) {
                const std::string path = in_out_dir(c, run.name + ".gp");
                std::ofstream f(path, std::ios::binary);
                f << gnuplot_script(run);
                written.push_back(path);
            }
            for (const auto &p : written) std::cout << p << '\n';
            return 0;
        }

        if (*oracle) {
            const WeightedGraph graph = graph_or_instance(oracle_graph, c);
            const VertexSet best = max_weighted_clique_bruteforce(graph);
            write_json({{"clique", best.members()}, {"weight", clique_weight(graph, best)}}, "-");
            return 0;
        }
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
