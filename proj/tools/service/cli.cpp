/*
 * Copyright 2026 The edom Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "service.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include <edom/errors.hpp>
#include <edom/generators.hpp>
#include <edom/io.hpp>
#include <edom/oracle.hpp>
#include <edom/split.hpp>
#include <edom/split_solvers.hpp>

namespace edom::service {

namespace {

struct Globals {
    bool json = false;
    std::string budget;
    std::uint64_t seed = 1;
};

std::set<std::string> split_list(const std::vector<std::string>& items)
{
    std::set<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) out.insert(part);
    }
    return out;
}

std::vector<int> int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw InputError("bad index list '" + text + "'");
        }
    }
    return out;
}

json read_json_file(const std::string& path)
{
    try {
        return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

std::uint64_t budget_for(const Globals& gl, const std::string& param)
{
    auto b = parse_budget(gl.budget);
    auto it = b.find(param);
    return it == b.end() ? OracleOptions{}.budget : it->second;
}

// Commands

int cmd_analyze(const Globals& gl, const std::string& path, const std::vector<std::string>& params,
                const std::string& method, bool strict, std::ostream& out, std::ostream& err)
{
    Graph g = read_graph_file(path);
    AnalyzeOptions opt;
    if (!params.empty()) opt.params = split_list(params);
    opt.method = method;
    opt.budget = parse_budget(gl.budget);
    auto r = analyze(g, opt);
    if (gl.json)
        out << to_json(r).dump(2) << "\n";
    else
        out << to_text(r);
    if (strict && r.any_budget_exceeded()) {
        err << "error: budget exceeded\n";
        return Exit::budget;
    }
    return Exit::ok;
}

int cmd_reduce(const std::string& kind, const std::string& input, const std::string& output,
               const std::string& gadget_name, std::ostream& out)
{
    json j;
    if (kind == "x3c") {
        auto inst = x3c_from_json(read_json_file(input));
        j = constructed_json(reduce_x3c(inst));
    } else if (kind == "3dm") {
        auto inst = threedm_from_json(read_json_file(input));
        std::optional<GadgetCandidate> gadget;
        for (const auto& c : gadget_candidates())
            if (c.name == gadget_name) gadget = c;
        if (!gadget) throw InputError("unknown gadget '" + gadget_name + "'");
        auto r = reduce_3dm(inst, *gadget);
        j = constructed_json(r.constructed);
        j["tree"] = tree_json(r.tree);
        j["warnings"] = r.warnings;
    } else {
        Graph g = read_graph_file(input);
        if (kind == "gp2")
            j = constructed_json(build_gp2(g));
        else if (kind == "gp3")
            j = constructed_json(build_gp3(g));
        else
            j = constructed_json(build_gp5(g));
    }
    write_output(output, j.dump(2) + "\n", out);
    return Exit::ok;
}

int cmd_verify(const Globals& gl, const std::string& graph_path, const std::string& strategy_path,
               std::ostream& out, std::ostream& err)
{
    Graph g = read_graph_file(graph_path);
    DefenseStrategy s = strategy_from_json(read_text_file(strategy_path));
    if (!strategy_fits(g, s)) {
        err << "error: strategy does not fit the graph (n=" << g.order() << ", k=" << s.k << ")\n";
        return Exit::usage;
    }
    auto rep = verify_closure(g, s);
    if (gl.json) {
        json j{{"proven", rep.proven}, {"visitedConfigs", rep.visited_configs}, {"summary", rep.summary()}};
        if (!rep.proven) {
            j["config"] = to_vertices(rep.config);
            j["attack"] = rep.attack;
            j["reason"] = rep.reason;
        }
        out << j.dump(2) << "\n";
    } else {
        out << rep.summary() << "\n";
    }
    return rep.proven ? Exit::ok : Exit::negative;
}

int cmd_oracle(const Globals& gl, const std::string& path, int k, const std::string& model, std::ostream& out,
               std::ostream& err)
{
    Graph g = read_graph_file(path);
    if (!g.fits_mask()) throw InputError("graph has more than 64 vertices");
    OracleOptions opt;
    opt.model = model == "one" ? GuardModel::one_guard : GuardModel::all_guards;
    opt.budget = budget_for(gl, model == "one" ? "edn" : "medn");

    if (k == 0) {
        try {
            int v = model == "one" ? edn_oracle(g, opt).value : medn_oracle(g, opt);
            if (gl.json)
                out << json{{"value", v}, {"model", model}}.dump(2) << "\n";
            else
                out << v << "\n";
            return Exit::ok;
        } catch (const BudgetExceeded& e) {
            err << "error: " << e.what() << "\n";
            return Exit::budget;
        }
    }
    if (model == "one") throw InputError("--k is only supported for the all-guards model");
    if (k < 1 || k > g.order()) throw InputError("k must lie in 1..n");
    auto res = medn_feasible(g, k, opt);
    const char* word = res.outcome == Feasibility::feasible     ? "feasible"
                       : res.outcome == Feasibility::infeasible ? "infeasible"
                                                                : "unknown";
    if (gl.json) {
        json j{{"k", k}, {"outcome", word}, {"work", res.work}, {"dominatingSets", res.dominating_sets}};
        if (res.outcome == Feasibility::feasible) j["initial"] = to_vertices(res.winning.configs.front());
        out << j.dump(2) << "\n";
    } else {
        out << word << "\n";
    }
    if (res.outcome == Feasibility::feasible) return Exit::ok;
    return res.outcome == Feasibility::infeasible ? Exit::negative : Exit::budget;
}

int cmd_strategy(const std::string& kind, const std::string& input, const std::string& pick,
                 const std::string& output, std::ostream& out)
{
    DefenseStrategy s;
    if (kind == "x3c") {
        auto inst = x3c_from_json(read_json_file(input));
        std::vector<int> cover;
        if (pick.empty()) {
            auto all = exact_covers(inst);
            if (all.empty()) throw PreconditionError("instance has no exact cover");
            cover = all.front();
        } else {
            cover = int_list(pick);
            if (!is_exact_cover(inst, cover)) throw InputError("given triples are not an exact cover");
        }
        s = strategy_x3c(reduce_x3c(inst), cover);
    } else if (kind == "3dm") {
        auto inst = threedm_from_json(read_json_file(input));
        std::vector<int> matching;
        if (pick.empty()) {
            auto all = perfect_matchings(inst);
            if (all.empty()) throw PreconditionError("instance has no perfect matching");
            matching = all.front();
        } else {
            matching = int_list(pick);
            if (!is_perfect_matching(inst, matching)) throw InputError("given triples are not a perfect matching");
        }
        s = strategy_3dm(reduce_3dm(inst).constructed, matching);
    } else {
        Graph g = read_graph_file(input);
        auto p = split_partition(g);
        if (!p) throw PreconditionError("not a split graph");
        if (kind == "k13")
            s = strategy_k13(g, *p);
        else if (kind == "k14-2")
            s = strategy_k14_2split(g, *p);
        else if (kind == "k14-3")
            s = strategy_k14_3split(g, *p);
        else {
            auto a = auto_strategy(g);
            if (!a) throw PreconditionError("no strategy is known for this graph");
            s = std::move(*a);
        }
    }
    write_output(output, strategy_to_json(s) + "\n", out);
    return Exit::ok;
}

int cmd_selftest(const Globals& gl, std::ostream& out)
{
    struct Check {
        std::string name;
        bool pass;
    };
    std::vector<Check> checks;
    auto check = [&](const std::string& name, auto&& fn) {
        bool pass = false;
        try {
            pass = fn();
        } catch (const std::exception&) {
            pass = false;
        }
        checks.push_back({name, pass});
    };

    check("medn(P5) = 3", [] { return medn_oracle(path_graph(5)) == 3; });
    check("medn(K1,4) = 2", [] { return medn_oracle(star_graph(4)) == 2; });
    check("medn(C4) = 2", [] { return medn_oracle(cycle_graph(4)) == 2; });
    check("gamma(P5) = 2", [] { return gamma_exact(path_graph(5)) == 2; });
    check("edn(P4) = alpha(P4) = 2", [] { return edn_oracle(path_graph(4)).value == 2; });
    check("x3c figure instance needs 5 guards", [] {
        auto cg = reduce_x3c(fig2_instance());
        auto s = strategy_x3c(cg, exact_covers(fig2_instance()).front());
        return cg.graph.order() == 17 && s.k == 5 && verify_closure(cg.graph, s).proven;
    });
    check("3dm figure strategy closes with 10 guards", [] {
        auto r = reduce_3dm(fig3_instance());
        auto s = strategy_3dm(r.constructed, perfect_matchings(fig3_instance()).front());
        return s.k == 10 && r.tree.path_property && verify_closure(r.constructed.graph, s).proven;
    });
    // a closed strategy is an upper bound whatever the formula says
    check("random 2-split strategies close and bound the oracle", [&] {
        Rng rng(gl.seed);
        for (int i = 0; i < 10; ++i) {
            Graph g = random_k14_split(rng, 9, 2);
            auto s = strategy_k14_2split(g, *split_partition(g));
            if (!verify_closure(g, s).proven || medn_oracle(g) > s.k) return false;
        }
        return true;
    });

    bool all = true;
    json j = json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        if (gl.json)
            j.push_back({{"name", c.name}, {"pass", c.pass}});
        else
            out << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    }
    if (gl.json) out << j.dump(2) << "\n";
    return all ? Exit::ok : Exit::negative;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Guard placement analysis for the eternal domination game", "edom"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals gl;
    app.add_flag("--json", gl.json, "Print machine-readable JSON");
    app.add_option("--budget", gl.budget, "Oracle work limit, e.g. 2e7 or medn=1e6,edn=5e6");
    app.add_option("--seed", gl.seed, "Seed for random samples");

    std::string path, input, output, kind, method = "auto", model = "all", graph_path, strategy_path, pick;
    std::string gadget = default_gadget().name;
    std::vector<std::string> params;
    bool strict = false;
    int k = 0;
    ServeOptions serve_opt;
    std::string persist, static_dir;

    auto* analyze_cmd = app.add_subcommand("analyze", "Compute domination parameters of a graph");
    analyze_cmd->add_option("graph", path, "Graph file (JSON or edge list)")->required();
    analyze_cmd->add_option("--param", params, "gamma, alpha, medn, edn (comma separated)");
    analyze_cmd->add_option("--method", method, "Method for medn")
        ->check(CLI::IsMember({"auto", "k13", "k14-2", "k14-3", "oracle"}));
    analyze_cmd->add_flag("--strict", strict, "Fail with exit 3 when a budget runs out");

    auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduction or GP_k graph");
    reduce_cmd->add_option("kind", kind, "x3c, 3dm, gp2, gp3 or gp5")
        ->required()
        ->check(CLI::IsMember({"x3c", "3dm", "gp2", "gp3", "gp5"}));
    reduce_cmd->add_option("input", input, "Instance or graph file")->required();
    reduce_cmd->add_option("output", output, "Output file (default stdout)");
    reduce_cmd->add_option("-o,--out", output, "Output file (default stdout)");
    reduce_cmd->add_option("--gadget", gadget, "3dm gadget chords");

    auto* verify_cmd = app.add_subcommand("verify-strategy", "Check that a strategy closes on a graph");
    verify_cmd->add_option("graph", graph_path, "Graph file")->required();
    verify_cmd->add_option("strategy", strategy_path, "Strategy JSON")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Run the exact game solver");
    oracle_cmd->add_option("graph", path, "Graph file")->required();
    oracle_cmd->add_option("--k", k, "Decide feasibility for k guards instead of computing the value");
    oracle_cmd->add_option("--model", model, "all (all guards move) or one")->check(CLI::IsMember({"all", "one"}));

    auto* strategy_cmd = app.add_subcommand("strategy", "Emit a defence strategy as JSON");
    strategy_cmd->add_option("kind", kind, "auto, k13, k14-2, k14-3, x3c or 3dm")
        ->required()
        ->check(CLI::IsMember({"auto", "k13", "k14-2", "k14-3", "x3c", "3dm"}));
    strategy_cmd->add_option("input", input, "Graph or instance file")->required();
    strategy_cmd->add_option("--pick", pick, "Cover or matching as triple indices, e.g. 0,1,3");
    strategy_cmd->add_option("-o,--out", output, "Output file (default stdout)");

    auto* serve_cmd = app.add_subcommand("serve", "Run the session API");
    serve_cmd->add_option("--host", serve_opt.host, "Bind address");
    serve_cmd->add_option("--port", serve_opt.port, "Port");
    serve_cmd->add_option("--persist", persist, "Directory for session snapshots");
    serve_cmd->add_option("--static", static_dir, "Directory of static assets to serve at /");

    auto* selftest_cmd = app.add_subcommand("selftest", "Quick consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(gl, path, params, method, strict, out, err);
        if (reduce_cmd->parsed()) return cmd_reduce(kind, input, output, gadget, out);
        if (verify_cmd->parsed()) return cmd_verify(gl, graph_path, strategy_path, out, err);
        if (oracle_cmd->parsed()) return cmd_oracle(gl, path, k, model, out, err);
        if (strategy_cmd->parsed()) return cmd_strategy(kind, input, pick, output, out);
        if (selftest_cmd->parsed()) return cmd_selftest(gl, out);
        if (serve_cmd->parsed()) {
            if (!persist.empty()) serve_opt.persist_dir = persist;
            if (!static_dir.empty()) serve_opt.static_dir = static_dir;
            serve_opt.oracle_budget = budget_for(gl, "medn");
            return serve(serve_opt, err);
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return Exit::budget;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Exit::negative;
    }
    return Exit::usage;
}

}  // namespace edom::service
