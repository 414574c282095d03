/*
Copyright 2026 The dagmetrics Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "dagmetrics/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dagmetrics/oracle.hpp"

namespace dagmetrics::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    bool verify = false;

    std::string file;
    bool per_vertex = false;
    bool all_pairs = false;
    std::string algo = "traversal";

    std::optional<std::size_t> n;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::vector<std::size_t> layered;
};

// Everything a command produces; rendered either as JSON or as text.
struct Report {
    std::string command;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t components = 0;
    Json result = Json::object();
    std::vector<std::string> lines;
    InstrumentationCounters counters;
    bool verify_requested = false;
    std::optional<bool> verified;
};

std::string count(std::size_t n, const char *noun, const char *plural) {
    return std::to_string(n) + " " + (n == 1 ? noun : plural);
}

Json vertex_json(const Dag &g, VertexId v) { return Json{{"label", g.label(v)}, {"index", v.index}}; }

Report make_report(const std::string &command, const Dag &g) {
    Report r;
    r.command = command;
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    r.components = weakly_connected_components(g).size();
    return r;
}

void print(const Report &r, bool json, std::ostream &out) {
    if (json) {
        Json doc;
        doc["command"] = r.command;
        doc["input"] = Json{{"vertices", r.vertices}, {"edges", r.edges}, {"components", r.components}};
        doc["result"] = r.result;
        doc["counters"] = Json{{"vertex_evaluations", r.counters.vertex_evaluations},
                               {"edge_examinations", r.counters.edge_examinations},
                               {"distance_updates", r.counters.distance_updates}};
        doc["verified"] = r.verified ? Json(*r.verified) : Json(nullptr);
        out << doc.dump(2) << '\n';
        return;
    }
    out << "command: " << r.command << '\n';
    out << "input: " << count(r.vertices, "vertex", "vertices") << ", " << count(r.edges, "edge", "edges") << ", "
        << count(r.components, "component", "components") << '\n';
    for (const auto &line : r.lines)
        out << line << '\n';
    out << "counters: vertex_evaluations=" << r.counters.vertex_evaluations
        << " edge_examinations=" << r.counters.edge_examinations
        << " distance_updates=" << r.counters.distance_updates << '\n';
    if (r.verify_requested)
        out << "verified: " << (r.verified ? (*r.verified ? "true" : "false") : "skipped (graph exceeds oracle bound)")
            << '\n';
}

Dag load(const std::string &path, std::istream &in) {
    if (path == "-")
        return build_dag(parse_edge_list(in));
    std::ifstream file(path);
    if (!file)
        throw InputError("cannot open " + path);
    return build_dag(parse_edge_list(file));
}

void fill_layering(Report &r, const Dag &g, const LayeringOutcome &outcome) {
    if (const auto *layers = std::get_if<LayerAssignment>(&outcome)) {
        std::map<std::uint32_t, std::vector<std::string>> grouped;
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
            grouped[layers->layer[v]].push_back(g.label(VertexId(v)));
        Json rows = Json::array();
        r.lines.push_back("balanced: yes");
        for (auto &[layer, labels] : grouped) {
            std::sort(labels.begin(), labels.end());
            rows.push_back(labels);
            std::string line = "layer " + std::to_string(layer) + ":";
            for (const auto &l : labels)
                line += " " + l;
            r.lines.push_back(line);
        }
        r.result = Json{{"balanced", true}, {"layers", rows}, {"witness", nullptr}};
        return;
    }
    const auto &w = std::get<UnbalancedWitness>(outcome);
    r.result = Json{{"balanced", false},
                    {"layers", nullptr},
                    {"witness",
                     {{"vertex", g.label(w.vertex)},
                      {"existing", w.existing_label},
                      {"attempted", w.attempted_label},
                      {"edge", Json::array({g.label(w.via_edge.from), g.label(w.via_edge.to)})}}}};
    r.lines.push_back("balanced: no");
    r.lines.push_back("witness: vertex " + g.label(w.vertex) + " has label " + std::to_string(w.existing_label) +
                      ", attempted " + std::to_string(w.attempted_label) + " via edge " +
                      g.label(w.via_edge.from) + " -> " + g.label(w.via_edge.to));
}

int cmd_stretch(const Options &opt, const Dag &g, std::size_t bound, std::ostream &out) {
    auto [result, counters] = stretch(g);
    Report r = make_report("stretch", g);
    r.counters = counters;
    r.result["stretch"] = result.stretch;
    r.result["witness_source"] = vertex_json(g, result.witness_source);
    r.lines.push_back("stretch: " + std::to_string(result.stretch));
    r.lines.push_back("witness source: " + g.label(result.witness_source));
    if (opt.per_vertex) {
        Json lp = Json::array();
        r.lines.push_back("lp:");
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            Json entry = vertex_json(g, VertexId(v));
            entry["lp"] = result.lp[v];
            lp.push_back(entry);
            r.lines.push_back("  " + g.label(VertexId(v)) + " " + std::to_string(result.lp[v]));
        }
        r.result["lp"] = lp;
    }
    if (opt.verify) {
        r.verify_requested = true;
        r.verified = verify_stretch(g, result, bound);
    }
    print(r, opt.json, out);
    return ok;
}

int cmd_diameter(const Options &opt, const Dag &g, std::ostream &out) {
    auto [distances, counters] = all_pairs_distances(g);
    auto result = diameter_from(distances);
    Report r = make_report("diameter", g);
    r.counters = counters;
    r.result["diameter"] = result.diameter;
    r.lines.push_back("diameter: " + std::to_string(result.diameter));
    if (result.witness) {
        auto [u, v] = *result.witness;
        r.result["witness"] = Json{{"from", vertex_json(g, u)}, {"to", vertex_json(g, v)}};
        r.lines.push_back("witness: " + g.label(u) + " -> " + g.label(v));
    } else {
        r.result["witness"] = nullptr;
        r.lines.push_back("witness: none");
    }
    if (opt.all_pairs) {
        Json all = Json::array();
        r.lines.push_back("distances:");
        for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
            for (const auto &e : distances.row(VertexId(u))) {
                all.push_back(Json{{"from", vertex_json(g, VertexId(u))},
                                   {"to", vertex_json(g, e.target)},
                                   {"distance", e.distance}});
                r.lines.push_back("  " + g.label(VertexId(u)) + " -> " + g.label(e.target) + " " +
                                  std::to_string(e.distance));
            }
        }
        r.result["distances"] = all;
    }
    if (opt.verify) {
        r.verify_requested = true;
        r.verified = verify_diameter(g, result, distances);
    }
    print(r, opt.json, out);
    return ok;
}

int cmd_layer(const Options &opt, const Dag &g, std::ostream &out) {
    auto [outcome, counters] = opt.algo == "pq" ? layer_pq(g) : layer_traversal(g);
    Report r = make_report("layer", g);
    r.counters = counters;
    r.lines.push_back("algorithm: " + opt.algo);
    fill_layering(r, g, outcome);
    if (opt.verify) {
        r.verify_requested = true;
        r.verified = verify_layering(g, outcome);
    }
    print(r, opt.json, out);
    return ok;
}

int cmd_check(const Options &opt, const Dag &g, std::ostream &out) {
    auto [outcome, counters] = layer_traversal(g);
    Report r = make_report("check", g);
    r.counters = counters;
    fill_layering(r, g, outcome);
    // check reports the verdict only.
    r.result.erase("layers");
    r.lines.erase(std::remove_if(r.lines.begin(), r.lines.end(),
                                 [](const std::string &l) { return l.rfind("layer ", 0) == 0; }),
                  r.lines.end());
    if (opt.verify) {
        r.verify_requested = true;
        r.verified = verify_layering(g, outcome);
    }
    print(r, opt.json, out);
    return is_layered(outcome) ? ok : unbalanced;
}

int cmd_gen(const Options &opt, std::ostream &out) {
    if (opt.p < 0.0 || opt.p > 1.0)
        throw UsageError("--p must lie in [0, 1]");
    DagBuildInput input;
    if (!opt.layered.empty()) {
        if (opt.layered[0] == 0 || opt.layered[1] == 0)
            throw UsageError("--layered needs positive layer count and width");
        input = oracle::gen_layered_dag(opt.layered[0], opt.layered[1], opt.p, opt.seed);
    } else {
        if (!opt.n)
            throw UsageError("gen requires --n (or --layered L W)");
        input = oracle::gen_random_dag(*opt.n, opt.p, opt.seed);
    }
    out << input.to_text();
    return ok;
}

} // namespace

std::size_t oracle_bound_from_env() {
    const char *raw = std::getenv("DAGMETRICS_ORACLE_BOUND");
    if (raw == nullptr)
        return oracle::default_bound;
    std::string_view text(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("DAGMETRICS_ORACLE_BOUND must be a non-negative integer, got '" +
                                    std::string(text) + "'");
    return value;
}

std::optional<bool> verify_stretch(const Dag &g, const StretchResult &result, std::size_t bound) {
    if (g.vertex_count() > bound)
        return std::nullopt;
    if (result.lp.size() != g.vertex_count() || oracle::oracle_stretch(g, bound) != result.stretch)
        return false;
    if (result.lp[result.witness_source.value()] != result.stretch)
        return false;
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
        std::uint32_t longest = 0;
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
            for (auto len : oracle::enumerate_path_lengths(g, VertexId(u), VertexId(v), bound))
                longest = std::max(longest, len);
        if (result.lp[u] != longest)
            return false;
    }
    return true;
}

bool verify_distances(const Dag &g, const DistanceMap &distances) {
    if (distances.source_count() != g.vertex_count())
        return false;
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
        auto bfs = oracle::bfs_distances(g, VertexId(u));
        std::size_t reachable = 0;
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            if (v == u || !bfs[v])
                continue;
            ++reachable;
            if (distances.find(VertexId(u), VertexId(v)) != bfs[v])
                return false;
        }
        if (distances.row(VertexId(u)).size() != reachable)
            return false;
    }
    return true;
}

bool verify_diameter(const Dag &g, const DiameterResult &result, const DistanceMap &distances) {
    if (!verify_distances(g, distances) || oracle::oracle_diameter(g) != result.diameter)
        return false;
    if (!result.witness)
        return result.diameter == 0;
    auto [u, v] = *result.witness;
    return oracle::bfs_distances(g, u)[v.value()] == result.diameter;
}

bool verify_layering(const Dag &g, const LayeringOutcome &outcome) {
    const auto *layers = std::get_if<LayerAssignment>(&outcome);
    if (oracle::oracle_graded(g) != (layers != nullptr))
        return false;
    if (layers == nullptr)
        return true;
    if (layers->layer.size() != g.vertex_count())
        return false;
    for (const auto &e : g.edges())
        if (layers->layer[e.to.value()] != layers->layer[e.from.value()] + 1)
            return false;
    for (const auto &component : weakly_connected_components(g)) {
        auto lowest = std::min_element(component.begin(), component.end(), [&](VertexId a, VertexId b) {
            return layers->layer[a.value()] < layers->layer[b.value()];
        });
        if (layers->layer[lowest->value()] != 0)
            return false;
    }
    return true;
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    Options opt;
    CLI::App app{"Stretch, diameter and layering of unweighted DAGs", "dagmetrics"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "Machine-readable JSON output");
    app.add_flag("--verify", opt.verify, "Cross-check the result against the brute-force oracles");

    auto *stretch_cmd = app.add_subcommand("stretch", "Longest directed path");
    stretch_cmd->add_option("FILE", opt.file, "Edge-list file, '-' for stdin")->required();
    stretch_cmd->add_flag("--per-vertex", opt.per_vertex, "Also print lp for every vertex");

    auto *diameter_cmd = app.add_subcommand("diameter", "Largest shortest directed distance");
    diameter_cmd->add_option("FILE", opt.file, "Edge-list file, '-' for stdin")->required();
    diameter_cmd->add_flag("--all-pairs", opt.all_pairs, "Also print every reachable pair's distance");

    auto *layer_cmd = app.add_subcommand("layer", "Layer a balanced DAG or report a conflict");
    layer_cmd->add_option("FILE", opt.file, "Edge-list file, '-' for stdin")->required();
    layer_cmd->add_option("--algo", opt.algo, "pq or traversal")->check(CLI::IsMember({"pq", "traversal"}));

    auto *check_cmd = app.add_subcommand("check", "Exit 1 when the DAG is unbalanced");
    check_cmd->add_option("FILE", opt.file, "Edge-list file, '-' for stdin")->required();

    auto *gen_cmd = app.add_subcommand("gen", "Emit a random DAG as an edge list");
    gen_cmd->add_option("--n", opt.n, "Vertex count");
    gen_cmd->add_option("--p", opt.p, "Edge probability")->capture_default_str();
    gen_cmd->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--layered", opt.layered, "Layer count and width")->expected(2);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (*gen_cmd)
            return cmd_gen(opt, out);
        std::size_t bound = oracle_bound_from_env();
        Dag g = load(opt.file, in);
        if (*stretch_cmd)
            return cmd_stretch(opt, g, bound, out);
        if (*diameter_cmd)
            return cmd_diameter(opt, g, out);
        if (*layer_cmd)
            return cmd_layer(opt, g, out);
        return cmd_check(opt, g, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const InputError &e) {
        err << e.what() << '\n';
        return input_error;
    }
}

} // namespace dagmetrics::cli
