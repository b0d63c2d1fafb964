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

#include <chrono>
#include <cmath>
#include <sstream>

#include <edom/chordal.hpp>
#include <edom/errors.hpp>
#include <edom/io.hpp>
#include <edom/oracle.hpp>
#include <edom/split.hpp>
#include <edom/split_solvers.hpp>

namespace edom::service {

namespace {

const std::set<std::string> kParams{"gamma", "alpha", "medn", "edn"};
const std::set<std::string> kMethods{"auto", "k13", "k14-2", "k14-3", "oracle"};

std::uint64_t parse_amount(const std::string& s)
{
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw InputError("bad budget value '" + s + "'");
    }
    if (used != s.size() || !(v >= 1) || v > 1e18) throw InputError("bad budget value '" + s + "'");
    return static_cast<std::uint64_t>(std::llround(v));
}

OracleOptions oracle_options(const AnalyzeOptions& opt, const std::string& param, GuardModel model)
{
    OracleOptions o;
    o.model = model;
    if (auto it = opt.budget.find(param); it != opt.budget.end()) o.budget = it->second;
    return o;
}

// medn by a forced or automatic method; returns the value and its tag
std::pair<int, std::string> medn_by(const Graph& g, const AnalyzeOptions& opt)
{
    const auto& m = opt.method;
    auto oracle = [&] { return std::pair{medn_oracle(g, oracle_options(opt, "medn", GuardModel::all_guards)), std::string("oracle")}; };
    if (m == "oracle") return oracle();

    auto p = split_partition(g);
    if (m == "auto") {
        if (!p || !is_connected(g)) return oracle();
        if (is_complete(g)) return {1, "complete"};
        if (is_star(g)) return {2, "star"};
        if (claw_free_split_check(g, *p)) return {solve_k13_free(g, *p), "k13"};
        if (is_k1t_free(g, 4) && p->delta_i == 2) return {solve_k14_2split(g, *p).value, "k14-2"};
        if (is_k1t_free(g, 4) && p->delta_i == 3) return {solve_k14_3split(g, *p).value, "k14-3"};
        return oracle();
    }

    if (!p) throw PreconditionError("not a split graph");
    if (!is_connected(g)) throw PreconditionError("graph is not connected");
    if (m == "k13") {
        if (is_complete(g)) return {1, "k13"};
        if (!claw_free_split_check(g, *p)) throw PreconditionError("graph is not K1,3-free");
        return {solve_k13_free(g, *p), "k13"};
    }
    if (!is_k1t_free(g, 4)) throw PreconditionError("graph is not K1,4-free");
    if (m == "k14-2") {
        if (p->delta_i != 2) throw PreconditionError("graph is not 2-split");
        return {solve_k14_2split(g, *p).value, "k14-2"};
    }
    if (p->delta_i != 3) throw PreconditionError("graph is not 3-split");
    return {solve_k14_3split(g, *p).value, "k14-3"};
}

}  // namespace

std::map<std::string, std::uint64_t> parse_budget(const std::string& text)
{
    std::map<std::string, std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            auto v = parse_amount(item);
            for (const auto& p : kParams) out[p] = v;
            continue;
        }
        auto key = item.substr(0, eq);
        if (!kParams.count(key)) throw InputError("unknown parameter '" + key + "' in budget");
        out[key] = parse_amount(item.substr(eq + 1));
    }
    return out;
}

bool AnalysisReport::any_budget_exceeded() const
{
    for (const auto& [k, v] : budget_exceeded)
        if (v) return true;
    return false;
}

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opt)
{
    if (!kMethods.count(opt.method)) throw InputError("unknown method '" + opt.method + "'");
    for (const auto& p : opt.params)
        if (!kParams.count(p)) throw InputError("unknown parameter '" + p + "'");
    if (!g.fits_mask()) throw InputError("graph has more than 64 vertices");

    AnalysisReport r;
    auto timed = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn();
            r.budget_exceeded[name] = false;
        } catch (const BudgetExceeded&) {
            r.budget_exceeded[name] = true;
        }
        r.timings_ms[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };

    // a forced method is an error when it does not apply, even if medn was not asked for
    if (opt.method != "auto" && opt.method != "oracle" && !opt.params.count("medn")) {
        auto p = split_partition(g);
        if (!p) throw PreconditionError("not a split graph");
    }

    if (opt.params.count("gamma"))
        timed("gamma", [&] {
            r.gamma = gamma_exact(g);
            r.methods["gamma"] = "branch-and-bound";
        });
    if (opt.params.count("alpha"))
        timed("alpha", [&] {
            if (is_chordal(g)) {
                r.alpha = static_cast<int>(chordal_max_independent_set(g).size());
                r.methods["alpha"] = "peo";
            } else {
                r.alpha = alpha_exact(g);
                r.methods["alpha"] = "exhaustive";
            }
        });
    if (opt.params.count("medn"))
        timed("medn", [&] {
            auto [v, tag] = medn_by(g, opt);
            r.medn = v;
            r.methods["medn"] = tag;
        });
    if (opt.params.count("edn"))
        timed("edn", [&] {
            auto e = edn_oracle(g, oracle_options(opt, "edn", GuardModel::one_guard));
            r.edn = e.value;
            r.methods["edn"] = "oracle";
            if (r.alpha && e.alpha && *r.alpha != *e.alpha)
                throw InconsistencyError("alpha disagrees between methods");
        });

    std::vector<std::optional<int>> chain{r.gamma, r.medn, r.alpha, r.edn};
    std::optional<int> last;
    for (const auto& v : chain) {
        if (!v) continue;
        if (last && *v < *last) r.sandwich = false;
        last = v;
    }
    return r;
}

json to_json(const AnalysisReport& r)
{
    json j;
    auto put = [&](const char* name, const std::optional<int>& v) { j[name] = v ? json(*v) : json(nullptr); };
    put("gamma", r.gamma);
    put("alpha", r.alpha);
    put("medn", r.medn);
    put("edn", r.edn);
    j["methods"] = r.methods;
    j["timings"] = r.timings_ms;
    j["budgetExceeded"] = r.budget_exceeded;
    j["sandwich"] = r.sandwich;
    return j;
}

std::string to_text(const AnalysisReport& r)
{
    std::ostringstream out;
    for (const char* name : {"gamma", "alpha", "medn", "edn"}) {
        const std::optional<int>* v = nullptr;
        std::string n = name;
        if (n == "gamma") v = &r.gamma;
        if (n == "alpha") v = &r.alpha;
        if (n == "medn") v = &r.medn;
        if (n == "edn") v = &r.edn;
        auto be = r.budget_exceeded.find(n);
        if (be == r.budget_exceeded.end()) continue;
        out << n << " = ";
        if (be->second)
            out << "unknown (budget exceeded)";
        else
            out << **v << " [" << r.methods.at(n) << "]";
        out << "\n";
    }
    if (!r.sandwich) out << "warning: sandwich bound violated\n";
    return out.str();
}

json graph_json(const Graph& g)
{
    return json::parse(to_json_text(g));
}

Graph graph_from_json(const json& j)
{
    if (!j.is_object()) throw InputError("graph must be a JSON object");
    return parse_graph_json(j.dump());
}

json constructed_json(const ConstructedGraph& cg)
{
    json j;
    j["graph"] = graph_json(cg.graph);
    j["roles"] = cg.roles;
    j["predictions"] = cg.predictions;
    return j;
}

json tree_json(const CliqueTree& t)
{
    json j;
    j["nodes"] = t.nodes;
    json edges = json::array();
    for (auto [a, b] : t.tree_edges) edges.push_back({a, b});
    j["edges"] = edges;
    j["pathProperty"] = t.path_property;
    return j;
}

namespace {

template <class Inst>
Inst instance_from_json(const json& j)
{
    Inst inst;
    try {
        if (!j.is_object()) throw InputError("instance must be a JSON object");
        if (!j.contains("q") || !j.contains("triples")) throw InputError("instance needs \"q\" and \"triples\"");
        inst.q = j.at("q").get<int>();
        for (const auto& t : j.at("triples")) {
            if (!t.is_array() || t.size() != 3) throw InputError("each triple must have three entries");
            inst.triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("bad instance: ") + e.what());
    }
    validate(inst);
    return inst;
}

}  // namespace

X3CInstance x3c_from_json(const json& j) { return instance_from_json<X3CInstance>(j); }
ThreeDMInstance threedm_from_json(const json& j) { return instance_from_json<ThreeDMInstance>(j); }

std::optional<DefenseStrategy> auto_strategy(const Graph& g)
{
    auto p = split_partition(g);
    if (!p || !is_connected(g) || g.order() < 2) return std::nullopt;
    try {
        if (is_complete(g) || is_star(g) || claw_free_split_check(g, *p)) return strategy_k13(g, *p);
        if (!is_k1t_free(g, 4)) return std::nullopt;
        if (p->delta_i == 2) return strategy_k14_2split(g, *p);
        if (p->delta_i == 3) return strategy_k14_3split(g, *p);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Preset> presets()
{
    std::vector<Preset> out;
    out.push_back({"star-4", "K1,4", star_graph(4), 2, std::nullopt});
    out.push_back({"star-6", "K1,6", star_graph(6), 2, std::nullopt});
    out.push_back({"path-4", "P4", path_graph(4), 2, std::nullopt});
    out.push_back({"path-5", "P5", path_graph(5), 3, std::nullopt});
    out.push_back({"path-7", "P7", path_graph(7), 4, std::nullopt});

    auto inst = fig2_instance();
    auto cg = reduce_x3c(inst);
    Graph fig2 = cg.graph;
    for (Vertex v = 0; v < fig2.order(); ++v) fig2.set_label(v, cg.roles[v]);
    out.push_back({"x3c-fig2", "exact cover reduction of the five-triple instance", fig2, cg.predictions.at("k"),
                   strategy_x3c(cg, exact_covers(inst).front())});

    auto gp = build_gp3(path_graph(3));
    Graph gp3 = gp.graph;
    for (Vertex v = 0; v < gp3.order(); ++v) gp3.set_label(v, gp.roles[v]);
    out.push_back({"gp3-path-3", "GP3 of P3", gp3, gp.predictions.at("medn"), std::nullopt});
    return out;
}

}  // namespace edom::service
