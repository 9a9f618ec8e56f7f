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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gbsdock/docking.h"
#include "gbsdock/docking_io.h"
#include "gbsdock/errors.h"
#include "gbsdock/graph_io.h"
#include "gbsdock/rng.h"
#include "gbsdock/sampling.h"
#include "gbsdock/stats.h"
#include "gbsdock/tuning.h"

namespace gbsdock {

namespace {

// Seed streams derived from the base seed.
enum Stream : std::uint64_t {
    kGbsSamples = 1,
    kClassicalSamples,
    kPostselectedSamples,
    kUniformSamples,
    kGbsSolve,
    kClassicalSolve,
    kNoisySamples,
    kNoisySolve,
};

std::string grow_rule_name(GrowRule r) { return r == GrowRule::MaxWeight ? "max-weight" : "weight-proportional"; }

GrowRule parse_grow_rule(const std::string &s) {
    if (s == "weight-proportional") return GrowRule::WeightProportional;
    if (s == "max-weight") return GrowRule::MaxWeight;
    throw ValidationError("unknown grow rule '" + s + "'");
}

}  // namespace

std::string instance_source_name(InstanceSource s) {
    switch (s) {
        case InstanceSource::Planted:
            return "planted";
        case InstanceSource::Graph:
            return "graph";
        case InstanceSource::Pharmacophore:
            return "pharmacophore";
    }
    return "planted";
}

InstanceSource parse_instance_source(const std::string &name) {
    if (name == "planted") return InstanceSource::Planted;
    if (name == "graph") return InstanceSource::Graph;
    if (name == "pharmacophore") return InstanceSource::Pharmacophore;
    throw ValidationError("unknown instance source '" + name + "'");
}

void ExperimentConfig::validate() const {
    if (source == InstanceSource::Graph && graph_path.empty()) throw ValidationError("graph source needs graph_path");
    if (source == InstanceSource::Pharmacophore && (ligand_path.empty() || receptor_path.empty())) {
        throw ValidationError("pharmacophore source needs ligand_path and receptor_path");
    }
    if (!(tau >= 0.0) || !(epsilon >= 0.0)) throw ValidationError("tau and epsilon must be non-negative");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ValidationError("alpha must be finite and non-negative");
    if (!(target_clicks > 0.0)) throw ValidationError("target_clicks must be positive");
    if (!(eta > 0.0 && eta <= 1.0) || !(noise_eta > 0.0 && noise_eta <= 1.0)) {
        throw ValidationError("transmissivities must lie in (0, 1]");
    }
    if (postselect_clicks < 1) throw ValidationError("postselect_clicks must be positive");
    if (random_search_samples < 1 || shrink_samples < 1) throw ValidationError("sample counts must be positive");
    if (max_steps < 0) throw ValidationError("max_steps must be non-negative");
    if (threads < 1) throw ValidationError("threads must be positive");
}

nlohmann::json config_to_json(const ExperimentConfig &c) {
    return {{"source", instance_source_name(c.source)},
            {"planted", planted_params_to_json(c.planted)},
            {"graph_path", c.graph_path},
            {"ligand_path", c.ligand_path},
            {"receptor_path", c.receptor_path},
            {"potential_path", c.potential_path},
            {"tau", c.tau},
            {"epsilon", c.epsilon},
            {"alpha", c.alpha},
            {"target_clicks", c.target_clicks},
            {"eta", c.eta},
            {"noise_eta", c.noise_eta},
            {"postselect_clicks", c.postselect_clicks},
            {"random_search_samples", c.random_search_samples},
            {"shrink_samples", c.shrink_samples},
            {"max_steps", c.max_steps},
            {"grow_rule", grow_rule_name(c.grow_rule)},
            {"seed", c.seed},
            {"out_dir", c.out_dir},
            {"threads", c.threads}};
}

ExperimentConfig config_from_json(const nlohmann::json &j) {
    if (!j.is_object()) throw ValidationError("experiment config must be a JSON object");
    ExperimentConfig c;
    try {
        c.source = parse_instance_source(j.value("source", instance_source_name(c.source)));
        if (j.contains("planted")) c.planted = planted_params_from_json(j.at("planted"));
        c.graph_path = j.value("graph_path", c.graph_path);
        c.ligand_path = j.value("ligand_path", c.ligand_path);
        c.receptor_path = j.value("receptor_path", c.receptor_path);
        c.potential_path = j.value("potential_path", c.potential_path);
        c.tau = j.value("tau", c.tau);
        c.epsilon = j.value("epsilon", c.epsilon);
        c.alpha = j.value("alpha", c.alpha);
        c.target_clicks = j.value("target_clicks", c.target_clicks);
        c.eta = j.value("eta", c.eta);
        c.noise_eta = j.value("noise_eta", c.noise_eta);
        c.postselect_clicks = j.value("postselect_clicks", c.postselect_clicks);
        c.random_search_samples = j.value("random_search_samples", c.random_search_samples);
        c.shrink_samples = j.value("shrink_samples", c.shrink_samples);
        c.max_steps = j.value("max_steps", c.max_steps);
        c.grow_rule = parse_grow_rule(j.value("grow_rule", grow_rule_name(c.grow_rule)));
        c.seed = j.value("seed", c.seed);
        c.out_dir = j.value("out_dir", c.out_dir);
        c.threads = j.value("threads", c.threads);
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("experiment config: ") + e.what());
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError("config '" + path + "': " + e.what());
    }
    return config_from_json(j);
}

std::string config_hash(const ExperimentConfig &c) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : config_to_json(c).dump()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Instance resolve_instance(const ExperimentConfig &c) {
    c.validate();
    auto finish = [](WeightedGraph g, std::optional<VertexSet> planted) {
        if (g.n() > kBruteForceMaxVertices) {
            throw SizeError("experiments need the exact optimum; graph has more than " +
                            std::to_string(kBruteForceMaxVertices) + " vertices");
        }
        VertexSet opt = max_weighted_clique_bruteforce(g);
        const double w = clique_weight(g, opt);
        return Instance{std::move(g), std::move(planted), std::move(opt), w};
    };
    switch (c.source) {
        case InstanceSource::Planted: {
            PlantedInstance p = generate_planted_instance(c.planted);
            return finish(std::move(p.graph), std::move(p.planted_clique));
        }
        case InstanceSource::Graph:
            return finish(load_graph(c.graph_path), std::nullopt);
        case InstanceSource::Pharmacophore: {
            const auto ligand = build_labeled_distance_graph(load_pharmacophores(c.ligand_path).points);
            const auto receptor = build_labeled_distance_graph(load_pharmacophores(c.receptor_path).points);
            const auto kappa =
                load_potential_csv(c.potential_path.empty() ? default_potential_path() : c.potential_path);
            auto big = build_binding_interaction_graph(ligand, receptor, kappa, c.tau, c.epsilon);
            return finish(std::move(big.graph), std::nullopt);
        }
    }
    throw ValidationError("unknown instance source");
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void write_table_csv(const Table &t, std::ostream &out) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

namespace {

nlohmann::json summary_header(const ExperimentConfig &c, const std::string &name, const Instance &inst) {
    nlohmann::json s;
    s["run"] = name;
    s["version"] = GBSDOCK_VERSION;
    s["seed"] = c.seed;
    s["config_hash"] = config_hash(c);
    s["config"] = config_to_json(c);
    s["instance"] = {{"n", inst.graph.n()},
                     {"edges", inst.graph.edge_count()},
                     {"optimum", inst.optimum.members()},
                     {"optimum_weight", inst.optimum_weight}};
    if (inst.planted) s["instance"]["planted"] = inst.planted->members();
    return s;
}

nlohmann::json interval_json(const Interval &i) { return {i.lower, i.upper}; }

// (size, rounded weight) -> count; ordered so output is deterministic.
using Histogram = std::map<std::pair<int, double>, long long>;

void add_to(Histogram &h, const VertexSet &s, double w) { ++h[{static_cast<int>(s.size()), std::round(w * 1e6) / 1e6}]; }

struct Campaign {
    Encoding encoding;
    SampleBatch gbs;
    SampleBatch classical;
    SolveResult gbs_result;
    SolveResult classical_result;
};

SolveResult solve(const ExperimentConfig &c, const Instance &inst, const SampleBatch &b, Stream stream) {
    return hybrid_pipeline(inst.graph, b, c.max_steps, derive_seed(c.seed, stream), inst.optimum_weight,
                           c.grow_rule, c.threads);
}

// GBS samples at transmissivity eta plus the moment-matched classical batch.
Campaign run_campaign(const ExperimentConfig &c, const Instance &inst) {
    Campaign out;
    out.encoding = tune_c_for_clicks(inst.graph, c.alpha, c.target_clicks, c.eta);
    out.gbs = sample_threshold_chain(device_state(out.encoding, c.eta), c.shrink_samples,
                                     derive_seed(c.seed, kGbsSamples), c.threads);
    const ClickMoments m = estimate_moments(out.gbs);
    out.classical = classical_baseline(inst.graph.n(), m.mean, m.variance, c.shrink_samples,
                                       derive_seed(c.seed, kClassicalSamples));
    out.gbs_result = solve(c, inst, out.gbs, kGbsSolve);
    out.classical_result = solve(c, inst, out.classical, kClassicalSolve);
    return out;
}

nlohmann::json encoding_summary(const Encoding &e, double eta) {
    const GaussianState s = device_state(e, eta);
    return {{"c", e.c}, {"eta", eta}, {"max_eigenvalue", e.eigenvalues.maxCoeff()}, {"mean_clicks", mean_clicks(s)}};
}

struct CurvePoint {
    double rate;
    Interval ci;
};

CurvePoint curve_point(const SolveResult &r, int k) {
    const long long hits = r.success_counts[static_cast<std::size_t>(k)];
    return {r.success_curve[static_cast<std::size_t>(k)], wilson_interval(hits, r.usable_samples)};
}

void push_curve(std::vector<std::string> &row, const SolveResult &r, int k) {
    const auto p = curve_point(r, k);
    row.push_back(std::to_string(r.success_counts[static_cast<std::size_t>(k)]));
    row.push_back(format_number(p.rate));
    row.push_back(format_number(p.ci.lower));
    row.push_back(format_number(p.ci.upper));
}

std::vector<std::string> curve_columns(const std::string &prefix) {
    return {prefix + "_hits", prefix + "_rate", prefix + "_lo", prefix + "_hi"};
}

}  // namespace

RunOutput run_figure3(const ExperimentConfig &c) {
    const Instance inst = resolve_instance(c);
    RunOutput out{"fig3", {}, summary_header(c, "fig3", inst)};
    const Encoding e = build_encoding(inst.graph, c.alpha);
    const SampleBatch gbs = sample_postselected(inst.graph, e, c.postselect_clicks, c.random_search_samples,
                                                derive_seed(c.seed, kPostselectedSamples));
    const SampleBatch uni = uniform_subsets(inst.graph.n(), c.postselect_clicks, c.random_search_samples,
                                            derive_seed(c.seed, kUniformSamples));

    Table t{"fig3_cliques", {"source", "size", "weight", "count"}, {}};
    nlohmann::json sources;
    for (const auto &[name, batch] : {std::pair{"gbs", &gbs}, std::pair{"classical", &uni}}) {
        const SolveResult r = random_search(inst.graph, *batch, inst.optimum_weight);
        Histogram h;
        for (const auto &rec : r.records) add_to(h, rec.best, rec.best_weight);
        for (const auto &[key, count] : h) {
            t.rows.push_back({name, std::to_string(key.first), format_number(key.second), std::to_string(count)});
        }
        sources[name] = {{"samples", batch->size()},
                         {"cliques", r.records.size()},
                         {"optimum_hits", r.success_counts.empty() ? 0 : r.success_counts[0]},
                         {"best_weight", r.best_weight}};
    }
    out.summary["postselect_clicks"] = c.postselect_clicks;
    out.summary["encoding"] = {{"c", e.c}, {"alpha", e.alpha}};
    out.summary["sources"] = sources;
    out.tables.push_back(std::move(t));
    return out;
}

RunOutput run_figure4(const ExperimentConfig &c) {
    const Instance inst = resolve_instance(c);
    RunOutput out{"fig4", {}, summary_header(c, "fig4", inst)};
    ExperimentConfig shrink_only = c;
    shrink_only.max_steps = 0;
    const Campaign camp = run_campaign(shrink_only, inst);

    Table t{"fig4_shrink", {"source", "size", "weight", "count", "fraction", "shown"}, {}};
    nlohmann::json sources;
    for (const auto &[name, r] :
         {std::pair{"gbs", &camp.gbs_result}, std::pair{"classical", &camp.classical_result}}) {
        Histogram h;
        for (const auto &rec : r->records) add_to(h, rec.shrunk, rec.shrunk_weight);
        std::pair<int, double> mode{0, 0.0};
        long long mode_count = -1;
        for (const auto &[key, count] : h) {
            const double frac = static_cast<double>(count) / static_cast<double>(r->usable_samples);
            t.rows.push_back({name, std::to_string(key.first), format_number(key.second), std::to_string(count),
                              format_number(frac), frac >= 0.005 ? "1" : "0"});
            if (count > mode_count) {
                mode = key;
                mode_count = count;
            }
        }
        const CurvePoint p = curve_point(*r, 0);
        sources[name] = {{"usable_samples", r->usable_samples},
                         {"success_hits", r->success_counts[0]},
                         {"success_rate", p.rate},
                         {"success_ci", interval_json(p.ci)},
                         {"modal_size", mode.first},
                         {"modal_weight", mode.second}};
    }
    out.summary["encoding"] = encoding_summary(camp.encoding, c.eta);
    out.summary["sources"] = sources;
    out.tables.push_back(std::move(t));
    return out;
}

RunOutput run_figure5_6(const ExperimentConfig &c) {
    const Instance inst = resolve_instance(c);
    RunOutput out{"fig56", {}, summary_header(c, "fig56", inst)};
    const Campaign camp = run_campaign(c, inst);

    Table t{"fig56_curves", {"k"}, {}};
    for (const auto &p : {"gbs", "classical"}) {
        for (auto &col : curve_columns(p)) t.columns.push_back(col);
    }
    for (int k = 0; k <= c.max_steps; ++k) {
        std::vector<std::string> row{std::to_string(k)};
        push_curve(row, camp.gbs_result, k);
        push_curve(row, camp.classical_result, k);
        t.rows.push_back(std::move(row));
    }
    const ClickMoments m = estimate_moments(camp.gbs);
    out.summary["encoding"] = encoding_summary(camp.encoding, c.eta);
    out.summary["click_moments"] = {{"mean", m.mean}, {"variance", m.variance}};
    out.summary["usable_samples"] = {{"gbs", camp.gbs_result.usable_samples},
                                     {"classical", camp.classical_result.usable_samples}};
    out.tables.push_back(std::move(t));
    return out;
}

RunOutput run_noise_study(const ExperimentConfig &c) {
    const Instance inst = resolve_instance(c);
    RunOutput out{"noise", {}, summary_header(c, "noise", inst)};
    ExperimentConfig clean = c;
    clean.eta = 1.0;
    const Campaign base = run_campaign(clean, inst);

    const Encoding noisy_enc = tune_c_for_clicks(inst.graph, c.alpha, c.target_clicks, c.noise_eta);
    const SampleBatch noisy = sample_threshold_chain(device_state(noisy_enc, c.noise_eta), c.shrink_samples,
                                                     derive_seed(c.seed, kNoisySamples), c.threads);
    const SolveResult noisy_result = solve(c, inst, noisy, kNoisySolve);

    Table t{"noise_curves", {"k"}, {}};
    for (const auto &p : {"noiseless", "noisy", "classical"}) {
        for (auto &col : curve_columns(p)) t.columns.push_back(col);
    }
    for (int k = 0; k <= c.max_steps; ++k) {
        std::vector<std::string> row{std::to_string(k)};
        push_curve(row, base.gbs_result, k);
        push_curve(row, noisy_result, k);
        push_curve(row, base.classical_result, k);
        t.rows.push_back(std::move(row));
    }
    const ClickMoments m = estimate_moments(noisy);
    out.summary["noiseless"] = encoding_summary(base.encoding, 1.0);
    out.summary["noisy"] = encoding_summary(noisy_enc, c.noise_eta);
    out.summary["noisy"]["squeezing_max"] = noisy_enc.squeezing.maxCoeff();
    out.summary["noiseless"]["squeezing_max"] = base.encoding.squeezing.maxCoeff();
    out.summary["noisy_click_moments"] = {{"mean", m.mean}, {"variance", m.variance}};
    out.tables.push_back(std::move(t));
    return out;
}

std::vector<std::string> write_run(const RunOutput &run, const std::string &out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw ValidationError("cannot create output directory '" + out_dir + "': " + ec.message());
    std::vector<std::string> written;
    auto open = [&](const std::string &file) {
        const std::string path = (fs::path(out_dir) / file).string();
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ValidationError("cannot write '" + path + "'");
        written.push_back(path);
        return f;
    };
    nlohmann::json summary = run.summary;
    for (const auto &t : run.tables) {
        auto f = open(t.name + ".csv");
        write_table_csv(t, f);
        summary["tables"].push_back(t.name + ".csv");
    }
    auto f = open(run.name + ".json");
    f << summary.dump(2) << '\n';
    return written;
}

std::string gnuplot_script(const RunOutput &run) {
    std::ostringstream s;
    s << "# gnuplot script for " << run.name << "\n"
      << "set datafile separator ','\nset key autotitle columnhead\nset grid\n";
    const std::string csv = run.tables.empty() ? "" : run.tables.front().name + ".csv";
    if (run.name == "fig3") {
        s << "set xlabel 'clique weight'\nset ylabel 'count'\nset style data impulses\n"
          << "plot '" << csv << "' using 3:(strcol(1) eq 'gbs' ? $4 : 1/0) title 'GBS' lw 3, \\\n"
          << "     '" << csv << "' using 3:(strcol(1) eq 'classical' ? $4 : 1/0) title 'classical' lw 3\n";
    } else if (run.name == "fig4") {
        s << "set xlabel 'clique weight'\nset ylabel 'fraction'\nset style data points\n"
          << "plot '" << csv << "' using 3:((strcol(1) eq 'gbs' && $6 == 1) ? $5 : 1/0) title 'GBS' pt 7, \\\n"
          << "     '" << csv << "' using 3:((strcol(1) eq 'classical' && $6 == 1) ? $5 : 1/0) title 'classical' pt 5\n";
    } else {
        const auto &cols = run.tables.front().columns;
        s << "set xlabel 'k'\nset ylabel 'success rate'\nset yrange [0:1]\nset style data linespoints\nplot ";
        bool first = true;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (cols[i].size() < 5 || cols[i].substr(cols[i].size() - 5) != "_rate") continue;
            s << (first ? "" : ", \\\n     ") << "'" << csv << "' using 1:" << i + 1 << " title '"
              << cols[i].substr(0, cols[i].size() - 5) << "'";
            first = false;
        }
        s << '\n';
    }
    return s.str();
}

}  // namespace gbsdock
