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

#include "edom/strategy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "edom/errors.hpp"
#include "edom/split_solvers.hpp"

namespace edom {

using nlohmann::json;

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string config_text(GuardConfig c)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each_bit(c, [&](Vertex v) {
        os << (first ? "" : ",") << v;
        first = false;
    });
    os << '}';
    return os.str();
}

std::string describe(const Binding& b)
{
    std::string out = b.kind;
    for (const auto& [role, v] : b.roles) out += " " + role + "=" + std::to_string(v);
    return out;
}

std::optional<Vertex> lowest_in(Mask m)
{
    if (!m) return std::nullopt;
    return lowest(m);
}

// Sequential order for a simultaneous move: each step lands on a free vertex.
// Leftover cycles only permute occupied vertices and are dropped.
std::vector<Move> order_moves(GuardConfig c, std::vector<Move> pending)
{
    std::vector<Move> out;
    GuardConfig cur = c;
    bool progress = true;
    while (!pending.empty() && progress) {
        progress = false;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (has(cur, pending[i].to)) continue;
            cur = (cur & ~bit(pending[i].from)) | bit(pending[i].to);
            out.push_back(pending[i]);
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
            progress = true;
            break;
        }
    }
    return out;
}

}  // namespace

const Family* DefenseStrategy::classify(GuardConfig c) const
{
    if (family_index_.size() == families.size()) {
        auto it = family_index_.find(c);
        return it == family_index_.end() ? nullptr : &families[it->second];
    }
    for (const auto& f : families)
        if (f.config == c) return &f;
    return nullptr;
}

const Rule* DefenseStrategy::rule(const std::string& family, Vertex r) const
{
    if (rule_index_.size() == rules.size()) {
        auto it = rule_index_.find({family, r});
        return it == rule_index_.end() ? nullptr : &rules[it->second];
    }
    for (const auto& rl : rules)
        if (rl.family == family && rl.attack == r) return &rl;
    return nullptr;
}

void DefenseStrategy::reindex()
{
    family_index_.clear();
    rule_index_.clear();
    for (std::size_t i = 0; i < families.size(); ++i) family_index_.emplace(families[i].config, i);
    for (std::size_t i = 0; i < rules.size(); ++i) rule_index_.emplace(std::make_pair(rules[i].family, rules[i].attack), i);
}

std::string ClosureReport::summary() const
{
    std::ostringstream os;
    if (proven) {
        os << "proven, " << visited_configs << " configs";
    } else {
        os << "counterexample at config " << config_text(config);
        if (attack >= 0) os << " attack " << attack;
        os << ": " << reason;
    }
    return os.str();
}

bool strategy_fits(const Graph& g, const DefenseStrategy& s)
{
    if (!g.fits_mask() || s.k < 1 || s.k > g.order()) return false;
    Mask all = full_mask(g.order());
    auto inside = [&](Vertex v) { return g.contains(v); };
    if ((s.initial & ~all) != 0) return false;
    if (!std::all_of(s.invariant.begin(), s.invariant.end(), inside)) return false;
    for (const auto& f : s.families)
        if ((f.config & ~all) != 0) return false;
    for (const auto& r : s.rules) {
        if (!inside(r.attack)) return false;
        for (const auto& m : r.moves)
            if (!inside(m.from) || !inside(m.to)) return false;
    }
    return true;
}

ClosureReport verify_closure(const Graph& g, const DefenseStrategy& s)
{
    ClosureReport rep;
    auto fail = [&](GuardConfig c, Vertex r, std::string why) {
        rep.proven = false;
        rep.config = c;
        rep.attack = r;
        rep.reason = std::move(why);
        return rep;
    };
    if (!strategy_fits(g, s)) return fail(s.initial, -1, "strategy does not fit the graph");
    const Mask inv = to_mask(s.invariant);
    if (popcount(s.initial) != s.k) return fail(s.initial, -1, "initial configuration does not hold k guards");
    if (!is_dominating(g, s.initial)) return fail(s.initial, -1, "initial configuration is not dominating");
    if ((s.initial & inv) != inv) return fail(s.initial, -1, "initial configuration misses the invariant");
    if (!s.classify(s.initial)) return fail(s.initial, -1, "initial configuration is not classified");

    std::unordered_set<GuardConfig> seen{s.initial};
    std::deque<GuardConfig> queue{s.initial};
    while (!queue.empty()) {
        GuardConfig c = queue.front();
        queue.pop_front();
        ++rep.visited_configs;
        const Family* fam = s.classify(c);
        for (Vertex r = 0; r < g.order(); ++r) {
            const Rule* rule = s.rule(fam->id, r);
            if (!rule) {
                if (has(c, r)) continue;
                return fail(c, r, "no rule for this attack in family " + fam->id);
            }
            GuardConfig cur = c;
            Mask arrived = 0;
            for (const Move& m : rule->moves) {
                if (!has(cur, m.from)) return fail(c, r, "move from unguarded vertex " + std::to_string(m.from));
                if (has(arrived, m.from)) return fail(c, r, "guard at " + std::to_string(m.from) + " moves twice");
                if (has(cur, m.to)) return fail(c, r, "move onto guarded vertex " + std::to_string(m.to));
                if (!g.adjacent(m.from, m.to))
                    return fail(c, r, "move along non-edge " + std::to_string(m.from) + "-" + std::to_string(m.to));
                cur = (cur & ~bit(m.from)) | bit(m.to);
                arrived |= bit(m.to);
            }
            if (!has(cur, r)) return fail(c, r, "attacked vertex left unguarded");
            if (!is_dominating(g, cur)) return fail(c, r, "response is not dominating");
            if ((cur & inv) != inv) return fail(c, r, "response breaks the invariant");
            if (!s.classify(cur)) return fail(c, r, "response lands on unclassified configuration " + config_text(cur));
            if (seen.insert(cur).second) queue.push_back(cur);
        }
    }
    rep.proven = true;
    return rep;
}

std::string strategy_to_json(const DefenseStrategy& s, bool pretty)
{
    json j;
    j["name"] = s.name;
    j["k"] = s.k;
    j["initial"] = to_vertices(s.initial);
    j["invariant"] = s.invariant;
    j["families"] = json::array();
    for (const auto& f : s.families)
        j["families"].push_back(
            {{"id", f.id}, {"kind", f.kind}, {"description", f.description}, {"config", to_vertices(f.config)}});
    j["rules"] = json::array();
    for (const auto& r : s.rules) {
        json moves = json::array();
        for (const auto& m : r.moves) moves.push_back({m.from, m.to});
        j["rules"].push_back({{"family", r.family},
                              {"attack", r.attack},
                              {"attackClass", r.attack_class},
                              {"moves", moves},
                              {"supplementary", r.supplementary}});
    }
    j["notes"] = s.notes;
    return pretty ? j.dump(2) : j.dump();
}

DefenseStrategy strategy_from_json(const std::string& text)
{
    DefenseStrategy s;
    try {
        json j = json::parse(text);
        auto mask_of = [](const json& arr) {
            Mask m = 0;
            for (const auto& v : arr) {
                int x = v.get<int>();
                if (x < 0 || x >= kMaxMaskVertices) throw InputError("vertex id out of range: " + std::to_string(x));
                m |= bit(x);
            }
            return m;
        };
        s.name = j.value("name", std::string{});
        s.k = j.at("k").get<int>();
        s.initial = mask_of(j.at("initial"));
        s.invariant = j.value("invariant", std::vector<Vertex>{});
        for (const auto& f : j.at("families"))
            s.families.push_back({f.at("id").get<std::string>(), f.value("kind", std::string{}),
                                  f.value("description", std::string{}), mask_of(f.at("config"))});
        for (const auto& r : j.at("rules")) {
            Rule rule;
            rule.family = r.at("family").get<std::string>();
            rule.attack = r.at("attack").get<int>();
            rule.attack_class = r.value("attackClass", std::string{});
            rule.supplementary = r.value("supplementary", false);
            for (const auto& m : r.at("moves")) {
                if (!m.is_array() || m.size() != 2) throw InputError("move must be a [from, to] pair");
                rule.moves.push_back({m[0].get<int>(), m[1].get<int>()});
            }
            s.rules.push_back(std::move(rule));
        }
        s.notes = j.value("notes", std::vector<std::string>{});
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed strategy: ") + e.what());
    }
    s.reindex();
    return s;
}

void RuleTable::add(const std::string& family, const std::string& attack_class, const std::string& text,
                    bool supplementary)
{
    TableCell cell;
    cell.supplementary = supplementary;
    for (const auto& alt : split_on(text, ':')) {
        std::vector<RoleMove> moves;
        if (alt != "-") {
            for (const auto& mv : split_on(alt, ',')) {
                auto arrow = mv.find("->");
                if (arrow == std::string::npos) throw PreconditionError("bad table move: " + mv);
                moves.push_back({trim(mv.substr(0, arrow)), trim(mv.substr(arrow + 2))});
            }
        }
        cell.alternatives.push_back(std::move(moves));
    }
    cells_[{family, attack_class}].push_back(std::move(cell));
}

std::vector<const TableCell*> RuleTable::cells(const std::string& family, const std::string& attack_class) const
{
    std::vector<const TableCell*> out;
    auto it = cells_.find({family, attack_class});
    if (it == cells_.end()) return out;
    for (const auto& c : it->second)
        if (!c.supplementary) out.push_back(&c);
    for (const auto& c : it->second)
        if (c.supplementary) out.push_back(&c);
    return out;
}

DefenseStrategy compile_strategy(const Graph& g, const StrategySpec& spec)
{
    if (!g.fits_mask()) throw PreconditionError("strategies need at most 64 vertices");
    DefenseStrategy s;
    s.name = spec.name;
    s.k = spec.k;
    s.initial = spec.initial;
    s.invariant = to_vertices(spec.invariant);

    std::unordered_map<GuardConfig, std::size_t> ids;
    std::map<std::string, int> per_kind;
    std::set<std::string> noted;
    auto note = [&](const std::string& text) {
        if (noted.insert(text).second) s.notes.push_back(text);
    };
    auto add_family = [&](GuardConfig c, const Binding& b) {
        auto [it, fresh] = ids.emplace(c, s.families.size());
        if (fresh) s.families.push_back({b.kind + "#" + std::to_string(per_kind[b.kind]++), b.kind, describe(b), c});
        return it->second;
    };

    auto first = spec.classify(spec.initial);
    if (!first) {
        note("initial configuration is not classified");
        s.reindex();
        return s;
    }
    add_family(spec.initial, *first);

    for (std::size_t idx = 0; idx < s.families.size(); ++idx) {
        const GuardConfig c = s.families[idx].config;
        const Binding fb = *spec.classify(c);
        for (Vertex r = 0; r < g.order(); ++r) {
            if (has(c, r)) continue;
            auto ab = spec.attack(c, fb, r);
            if (!ab) {
                note("attack on " + std::to_string(r) + " has no class in " + fb.kind);
                continue;
            }
            std::map<std::string, Vertex> roles = fb.roles;
            for (const auto& [k, v] : ab->roles) roles[k] = v;
            roles["r"] = r;

            bool answered = false;
            for (const TableCell* cell : spec.table.cells(fb.kind, ab->kind)) {
                for (const auto& alt : cell->alternatives) {
                    if (alt.empty()) continue;
                    std::vector<Move> moves;
                    bool ok = true;
                    for (const auto& rm : alt) {
                        auto f = roles.find(rm.from), t = roles.find(rm.to);
                        if (f == roles.end() || t == roles.end()) {
                            ok = false;
                            break;
                        }
                        if (f->second != t->second) moves.push_back({f->second, t->second});
                    }
                    if (!ok) continue;
                    Mask froms = 0, tos = 0;
                    for (const Move& m : moves) {
                        if (has(froms, m.from) || has(tos, m.to) || !has(c, m.from) || !g.adjacent(m.from, m.to)) {
                            ok = false;
                            break;
                        }
                        froms |= bit(m.from);
                        tos |= bit(m.to);
                    }
                    if (!ok) continue;
                    GuardConfig next = (c & ~froms) | tos;
                    if (popcount(next) != spec.k || !has(next, r) || (next & spec.invariant) != spec.invariant ||
                        !is_dominating(g, next))
                        continue;
                    auto nb = spec.classify(next);
                    if (!nb) continue;
                    std::size_t target = add_family(next, *nb);
                    (void)target;
                    s.rules.push_back({s.families[idx].id, r, ab->kind, order_moves(c, moves), cell->supplementary});
                    if (cell->supplementary) note("supplementary cell used: " + fb.kind + " / " + ab->kind);
                    answered = true;
                    break;
                }
                if (answered) break;
            }
            if (!answered) note("no alternative answers " + fb.kind + " / " + ab->kind);
        }
    }
    s.reindex();
    return s;
}

// Claw-free split graphs

DefenseStrategy strategy_k13(const Graph& g, const SplitPartition& p)
{
    int value = 0;
    if (is_connected(g) && (is_complete(g) || is_star(g))) {
        if (!is_valid_split_partition(g, p) || !claw_free_split_check(g, p))
            throw PreconditionError("graph is not a claw-free split graph");
        value = is_complete(g) ? 1 : 2;
    } else {
        value = solve_k13_free(g, p);
    }
    if (!g.fits_mask()) throw PreconditionError("strategies need at most 64 vertices");
    const int n = g.order();
    std::vector<int> part(n, -1);
    std::vector<Mask> parts;
    for (Vertex v : p.independent) {
        part[v] = static_cast<int>(parts.size());
        parts.push_back(bit(v));
    }
    Mask leftover = 0;
    for (Vertex c : p.clique) {
        auto nb = independent_neighbors(g, p, c);
        if (nb.empty()) {
            leftover |= bit(c);
        } else {
            part[c] = part[*std::min_element(nb.begin(), nb.end())];
            parts[part[c]] |= bit(c);
        }
    }
    if (leftover) {
        for_each_bit(leftover, [&](Vertex c) { part[c] = static_cast<int>(parts.size()); });
        parts.push_back(leftover);
    }
    if (static_cast<int>(parts.size()) != value)
        throw InconsistencyError("clique partition has " + std::to_string(parts.size()) + " parts, expected " +
                                 std::to_string(value));

    Mask clique = to_mask(p.clique);
    StrategySpec spec;
    spec.name = "k13";
    spec.k = value;
    for (Mask m : parts) spec.initial |= bit((m & clique) ? lowest(m & clique) : lowest(m));
    spec.table.add("P", "part", "g->r");
    spec.classify = [parts](GuardConfig c) -> std::optional<Binding> {
        for (Mask m : parts)
            if (popcount(c & m) != 1) return std::nullopt;
        return Binding{"P", {}};
    };
    spec.attack = [parts, part](GuardConfig c, const Binding&, Vertex r) -> std::optional<Binding> {
        return Binding{"part", {{"g", lowest(c & parts[part[r]])}}};
    };
    return compile_strategy(g, spec);
}

// Base plus one free guard, for the 2-split and 3-split proofs

namespace {

enum class FloaterTable { case1, case2 };

DefenseStrategy base_floater_strategy(const Graph& g, const SplitPartition& p, Mask base, FloaterTable table,
                                      const std::string& name)
{
    if (!g.fits_mask()) throw PreconditionError("strategies need at most 64 vertices");
    const Mask clique = to_mask(p.clique);
    const Mask indep = to_mask(p.independent);
    // D1 = base + an independent vertex, D2 = base + a clique vertex.
    const bool c1 = table == FloaterTable::case1;
    const std::string d1_free = c1 ? "i_v" : "i*", d1_support = c1 ? "l_m" : "v*";
    const std::string hit = c1 ? "i*" : "i_v", hit_support = c1 ? "l_m*" : "v_i";

    StrategySpec spec;
    spec.name = name;
    spec.k = popcount(base) + 1;
    spec.invariant = base;
    spec.initial = base | (indep ? bit(lowest(indep)) : bit(lowest(clique & ~base)));
    if (c1) {
        spec.table.add("D1", "c_v", "l_m->c_v, i_v->l_m");
        spec.table.add("D2", "c_v", "c*->c_v");
        spec.table.add("D1", "i*", "l_m*->i*, l_m->l_m*, i_v->l_m");
        spec.table.add("D2", "i*", "l_m*->i*, c*->l_m*");
    } else {
        spec.table.add("D1", "c_v", "v*->c_v, i*->v*");
        spec.table.add("D2", "c_v", "c*->c_v");
        spec.table.add("D1", "i_v", "v_i->i_v, v*->v_i, i*->v*");
        spec.table.add("D2", "i_v", "v_i->i_v, c*->v_i");
    }
    spec.classify = [&g, base, indep, d1_free, d1_support](GuardConfig c) -> std::optional<Binding> {
        if ((c & base) != base || popcount(c & ~base) != 1) return std::nullopt;
        Vertex y = lowest(c & ~base);
        if (has(indep, y)) {
            Binding b{"D1", {{d1_free, y}}};
            if (auto s = lowest_in(g.open_mask(y) & base)) b.roles[d1_support] = *s;
            return b;
        }
        return Binding{"D2", {{"c*", y}}};
    };
    spec.attack = [&g, base, indep, hit, hit_support](GuardConfig, const Binding&, Vertex r) -> std::optional<Binding> {
        if (!has(indep, r)) return Binding{"c_v", {{"c_v", r}}};
        Binding b{hit, {{hit, r}}};
        if (auto s = lowest_in(g.open_mask(r) & base)) b.roles[hit_support] = *s;
        return b;
    };
    return compile_strategy(g, spec);
}

}  // namespace

DefenseStrategy strategy_k14_2split(const Graph& h, const SplitPartition& p)
{
    auto res = solve_k14_2split(h, p);
    Mask base = to_mask(res.reduced.labels);
    for (Vertex v : res.reduced.iprime) {
        Mask nb = h.open_mask(v);
        if (!nb) throw PreconditionError("graph is not connected");
        base |= bit(lowest(nb));
    }
    auto table = res.reduced.iprime.empty() ? FloaterTable::case1 : FloaterTable::case2;
    auto s = base_floater_strategy(h, p, base, table, "k14-2split");
    if (s.k != res.value) throw InconsistencyError("strategy size differs from the 2-split value");
    return s;
}

DefenseStrategy strategy_k14_3split(const Graph& g, const SplitPartition& p)
{
    auto res = solve_k14_3split(g, p);
    const int n = g.order();
    std::map<Vertex, Vertex> rep;
    for (Vertex v : res.reduced.iprime) {
        Mask nb = g.open_mask(v);
        if (!nb) throw PreconditionError("graph is not connected");
        rep[v] = lowest(nb);
    }
    Mask labels = to_mask(res.reduced.labels);
    // Representatives come from the witness so that the base covers A.
    for (const auto& [a, b] : res.q_type.witness) {
        (void)a;
        if (has(labels, b)) continue;
        int w = res.q.weight.at(b);
        if (w < n) rep[w] = b;
    }
    Mask base = labels;
    for (const auto& [v, c] : rep) base |= bit(c);
    if (res.q_type.type == QType::neither) base |= bit(res.x);
    auto s = base_floater_strategy(g, p, base, FloaterTable::case2, "k14-3split");
    if (s.k != res.value) throw InconsistencyError("strategy size differs from the 3-split value");
    return s;
}

// Exact 3-cover graph

DefenseStrategy strategy_x3c(const ConstructedGraph& cg, const std::vector<int>& cover)
{
    const Graph& g = cg.graph;
    if (!g.fits_mask()) throw PreconditionError("strategies need at most 64 vertices");
    Mask cs = 0, xs = 0;
    std::vector<Vertex> c_of;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& role = cg.roles[v];
        if (role.size() > 1 && role[0] == 'c') {
            cs |= bit(v);
            c_of.push_back(v);
        }
        if (role.size() > 1 && role[0] == 'x') xs |= bit(v);
    }
    const Vertex u = cg.vertex("u"), v = cg.vertex("v"), w = cg.vertex("w");
    const int q = popcount(xs) / 3;
    Mask d = 0, covered = 0;
    for (int t : cover) {
        if (t < 0 || t >= static_cast<int>(c_of.size())) throw PreconditionError("cover names an unknown triple");
        Mask nx = g.open_mask(c_of[t]) & xs;
        if (has(d, c_of[t]) || (covered & nx)) throw PreconditionError("cover is not exact");
        d |= bit(c_of[t]);
        covered |= nx;
    }
    if (covered != xs || static_cast<int>(cover.size()) != q) throw PreconditionError("cover is not exact");

    const Mask sstar = d | bit(u);
    StrategySpec spec;
    spec.name = "x3c";
    spec.k = q + 2;
    spec.initial = sstar | bit(w);
    spec.invariant = sstar;
    // S1 = S* + beta with beta in {v, w}; S2 = S* + c* or S* + x*.
    spec.table.add("S1", "x_i", "c_xi->x_i, u->c_xi, beta->u");
    spec.table.add("S2", "x_i", "c_xi->x_i, c*->c_xi : c_xi->x_i, c_x*->c_xi, x*->c_x*");
    spec.table.add("S1", "c_k", "u->c_k, beta->u");
    spec.table.add("S2", "c_k", "c*->c_k : c_x*->c_k, x*->c_x*");
    spec.table.add("S1", "v(w)", "u->vw, wv->u");
    spec.table.add("S2", "v(w)", "u->vw, c*->u : u->vw, c_x*->u, x*->c_x*");
    spec.classify = [&g, sstar, cs, xs, u, v, w](GuardConfig c) -> std::optional<Binding> {
        if ((c & sstar) != sstar || popcount(c & ~sstar) != 1) return std::nullopt;
        Vertex y = lowest(c & ~sstar);
        if (y == v || y == w) return Binding{"S1", {{"beta", y}, {"u", u}}};
        if (has(cs, y)) return Binding{"S2", {{"c*", y}, {"u", u}}};
        if (has(xs, y)) {
            Binding b{"S2", {{"x*", y}, {"u", u}}};
            if (auto s = lowest_in(g.open_mask(y) & sstar)) b.roles["c_x*"] = *s;
            return b;
        }
        return std::nullopt;
    };
    spec.attack = [&g, sstar, cs, xs, v, w](GuardConfig, const Binding&, Vertex r) -> std::optional<Binding> {
        if (has(xs, r)) {
            Binding b{"x_i", {{"x_i", r}}};
            if (auto s = lowest_in(g.open_mask(r) & sstar)) b.roles["c_xi"] = *s;
            return b;
        }
        if (has(cs, r)) return Binding{"c_k", {{"c_k", r}}};
        if (r == v || r == w) return Binding{"v(w)", {{"vw", r}, {"wv", r == v ? w : v}}};
        return std::nullopt;
    };
    return compile_strategy(g, spec);
}

// 3D-matching graph

namespace {

struct GadgetLayout {
    int p = 0;
    std::vector<std::array<Vertex, 9>> gadget;  // a..i
    std::vector<int> gadget_of;                 // -1 outside gadgets
    std::vector<int> letter_of;                 // 0..8 for a..i
    Mask elements = 0;
};

GadgetLayout read_layout(const ConstructedGraph& cg)
{
    GadgetLayout lay;
    const int n = cg.graph.order();
    lay.gadget_of.assign(n, -1);
    lay.letter_of.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        const auto& role = cg.roles[v];
        if (role.size() < 2) continue;
        char ch = role[0];
        if (ch == 'W' || ch == 'X' || ch == 'Y') {
            lay.elements |= bit(v);
        } else if (ch >= 'a' && ch <= 'i') {
            int t = std::stoi(role.substr(1));
            if (t >= static_cast<int>(lay.gadget.size())) lay.gadget.resize(t + 1);
            lay.gadget[t][ch - 'a'] = v;
            lay.gadget_of[v] = t;
            lay.letter_of[v] = ch - 'a';
        }
    }
    lay.p = static_cast<int>(lay.gadget.size());
    return lay;
}

const char* const kLetters[9] = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};

void bind_gadget(Binding& b, const GadgetLayout& lay, int t, const std::string& suffix)
{
    for (int l = 0; l < 9; ++l) b.roles[std::string(kLetters[l]) + suffix] = lay.gadget[t][l];
}

void add_3dm_table(RuleTable& t)
{
    // D1 = D' + {d, e of unmatched gadgets} + beta. Gadget roles: _i is the
    // attacked gadget, _k the gadget a D3 configuration is spread over.
    t.add("D1", "v(w)", "u->vw, wv->u");
    t.add("D1", "eps*", "u->eps*, beta->u");
    t.add("D1", "theta*", "z_theta*->theta*, u->z_theta*, beta->u");
    t.add("D1", "f", "d_i->f_i, u->c_i, beta->u");
    t.add("D1", "g", "d_i->g_i, u->b_i, beta->u");
    t.add("D1", "h", "e_i->h_i, u->b_i, beta->u");
    t.add("D1", "i", "e_i->i_i, u->a_i, beta->u");

    t.add("D2", "v(w)", "u->vw, x_st->u, st->x_st : u->vw, z_theta->u, theta->z_theta : u->vw, eps->u");
    t.add("D2", "eps*", "x_st->eps*, st->x_st : z_theta->eps*, theta->z_theta : eps->eps*");
    t.add("D2", "theta*",
          "z_theta*->theta*, x_st->z_theta*, st->x_st : z_theta*->theta*, z_theta->z_theta*, theta->z_theta : "
          "z_theta*->z_theta, eps->z_theta*");
    t.add("D2", "f", "d_i->f_i, x_st->c_i, st->x_st : d_i->f_i, z_theta->c_i, theta->z_theta : d_i->f_i, eps->c_i");
    t.add("D2", "g", "d_i->g_i, x_st->b_i, st->x_st : d_i->g_i, z_theta->b_i, theta->z_theta : d_i->g_i, eps->b_i");
    t.add("D2", "h", "e_i->h_i, x_st->b_i, st->x_st : e_i->h_i, z_theta->b_i, theta->z_theta : e_i->h_i, eps->b_i");
    t.add("D2", "i", "e_i->i_i, x_st->a_i, st->x_st : e_i->i_i, z_theta->a_i, theta->z_theta : e_i->i_i, eps->a_i");

    // D3 alternatives follow the four variants {f,c}, {g,b}, {h,b}, {i,a}.
    t.add("D3", "v(w)",
          "u->vw, c_k->u, f_k->d_k : u->vw, b_k->u, g_k->d_k : u->vw, b_k->u, h_k->e_k : u->vw, a_k->u, i_k->e_k");
    t.add("D3", "eps*", "c_k->eps*, f_k->d_k : b_k->eps*, g_k->d_k : b_k->eps*, h_k->e_k : a_k->eps*, i_k->e_k");
    t.add("D3", "theta*",
          "z_theta*->theta*, c_k->z_theta*, f_k->d_k : z_theta*->theta*, b_k->z_theta*, g_k->d_k : "
          "z_theta*->theta*, b_k->z_theta*, h_k->e_k : z_theta*->theta*, a_k->z_theta*, i_k->e_k");
    t.add("D3", "d", "f_k->d_k, u->beta, c_k->u : g_k->d_k, u->beta, b_k->u : - : -");
    t.add("D3", "e", "- : - : h_k->e_k, u->beta, b_k->u : i_k->e_k, u->beta, a_k->u");
    t.add("D3", "f", "- : b_k->f_k, g_k->c_k : b_k->f_k, d_k->c_k, h_k->e_k : d_k->f_k, a_k->c_k, i_k->e_k");
    t.add("D3", "g", "c_k->g_k, f_k->b_k : - : d_k->g_k, h_k->e_k : d_k->g_k, i_k->b_k, a_k->e_k");
    t.add("D3", "h", "e_k->h_k, f_k->b_k, c_k->g_k : e_k->h_k, g_k->d_k : - : a_k->h_k, i_k->b_k");
    t.add("D3", "i", "e_k->i_k, f_k->a_k, c_k->d_k : e_k->i_k, b_k->a_k, g_k->d_k : b_k->i_k, h_k->a_k : -");

    // Cells the printed table lacks or gets wrong.
    t.add("D2", "theta*", "z_theta*->theta*, eps->z_theta*", true);
    t.add("D3", "h", "e_k->h_k, f_k->b_k, c_k->d_k", true);
    t.add("D1", "s*", "x_s*->s*, u->x_s*, beta->u", true);
    t.add("D2", "s*", "x_s*->s*, x_st->x_s*, st->x_st : x_s*->s*, z_theta->x_s*, theta->z_theta : x_s*->s*, eps->x_s*",
          true);
    t.add("D3", "s*",
          "x_s*->s*, c_k->x_s*, f_k->d_k : x_s*->s*, b_k->x_s*, g_k->d_k : x_s*->s*, b_k->x_s*, h_k->e_k : "
          "x_s*->s*, a_k->x_s*, i_k->e_k",
          true);
    const char* restore[4][2] = {{"c_k", "f_k->d_k"}, {"b_k", "g_k->d_k"}, {"b_k", "h_k->e_k"}, {"a_k", "i_k->e_k"}};
    const std::pair<const char*, const char*> first[4] = {
        {"d_i->f_i", "c_i"}, {"d_i->g_i", "b_i"}, {"e_i->h_i", "b_i"}, {"e_i->i_i", "a_i"}};
    const char* cls[4] = {"f/other", "g/other", "h/other", "i/other"};
    for (int row = 0; row < 4; ++row) {
        std::string text;
        for (int var = 0; var < 4; ++var) {
            if (var) text += " : ";
            text += std::string(first[row].first) + ", " + restore[var][0] + "->" + first[row].second + ", " +
                    restore[var][1];
        }
        t.add("D3", cls[row], text, true);
    }
}

}  // namespace

DefenseStrategy strategy_3dm(const ConstructedGraph& cg, const std::vector<int>& matching)
{
    const Graph& g = cg.graph;
    if (!g.fits_mask()) throw PreconditionError("strategies need at most 64 vertices");
    const GadgetLayout lay = read_layout(cg);
    const Vertex u = cg.vertex("u"), v = cg.vertex("v"), w = cg.vertex("w");

    std::vector<bool> matched(lay.p, false);
    Mask covered = 0;
    for (int t : matching) {
        if (t < 0 || t >= lay.p || matched[t]) throw PreconditionError("matching names an unknown or repeated triple");
        matched[t] = true;
        Mask el = 0;
        for (int l = 0; l < 3; ++l) el |= g.open_mask(lay.gadget[t][l]) & lay.elements;
        if (covered & el) throw PreconditionError("matching is not perfect");
        covered |= el;
    }
    if (covered != lay.elements) throw PreconditionError("matching is not perfect");

    Mask dprime = bit(u), theta = 0, eps = 0, de = 0;
    for (int t = 0; t < lay.p; ++t) {
        const auto& gd = lay.gadget[t];
        if (matched[t]) {
            for (int l = 0; l < 3; ++l) dprime |= bit(gd[l]);
            for (int l = 3; l < 9; ++l) theta |= bit(gd[l]);
        } else {
            for (int l = 0; l < 3; ++l) eps |= bit(gd[l]);
            de |= bit(gd[3]) | bit(gd[4]);
        }
    }
    const Mask base1 = dprime | de;
    const Mask abc_matched = dprime & ~bit(u);
    const Mask elements = lay.elements;
    const int q = popcount(elements) / 3;

    StrategySpec spec;
    spec.name = "3dm";
    spec.k = 2 * lay.p + q + 2;
    spec.initial = base1 | bit(v);
    spec.invariant = dprime;
    add_3dm_table(spec.table);

    // D3 variants: (missing letter, two extra letters)
    static constexpr int kVariant[4][3] = {{3, 5, 2}, {3, 6, 1}, {4, 7, 1}, {4, 8, 0}};

    auto classify_3dm = [&g, lay, base1, dprime, de, theta, eps, elements, abc_matched, v,
                         w](GuardConfig c) -> std::optional<Binding> {
        if ((c & base1) == base1) {
            if (popcount(c & ~base1) != 1) return std::nullopt;
            Vertex y = lowest(c & ~base1);
            if (y == v || y == w) return Binding{"D1", {{"beta", y}}};
            Binding b{"D2", {}};
            Mask support = g.open_mask(y) & abc_matched;
            if (has(elements, y)) {
                b.roles["st"] = y;
                if (support) b.roles["x_st"] = lowest(support);
            } else if (has(theta, y)) {
                b.roles["theta"] = y;
                if (support) b.roles["z_theta"] = lowest(support);
            } else if (has(eps, y)) {
                b.roles["eps"] = y;
            } else {
                return std::nullopt;
            }
            return b;
        }
        if ((c & dprime) != dprime) return std::nullopt;
        Mask missing = de & ~c;
        if (popcount(missing) != 1) return std::nullopt;
        int t = lay.gadget_of[lowest(missing)];
        const auto& gd = lay.gadget[t];
        Mask extra = c & ~(dprime | de);
        for (const auto& var : kVariant) {
            if (lowest(missing) != gd[var[0]]) continue;
            if (extra != (bit(gd[var[1]]) | bit(gd[var[2]]))) continue;
            Binding b{"D3", {{"beta", v}}};
            bind_gadget(b, lay, t, "_k");
            return b;
        }
        return std::nullopt;
    };
    spec.classify = [classify_3dm, u](GuardConfig c) {
        auto b = classify_3dm(c);
        if (b) b->roles["u"] = u;
        return b;
    };
    spec.attack = [&g, lay, matched, theta, eps, elements, abc_matched, dprime, v,
                   w](GuardConfig c, const Binding& fb, Vertex r) -> std::optional<Binding> {
        (void)c;
        if (r == v || r == w) return Binding{"v(w)", {{"vw", r}, {"wv", r == v ? w : v}}};
        if (has(eps, r)) return Binding{"eps*", {{"eps*", r}}};
        if (has(theta, r)) {
            Binding b{"theta*", {{"theta*", r}}};
            if (auto s = lowest_in(g.open_mask(r) & abc_matched)) b.roles["z_theta*"] = *s;
            return b;
        }
        if (has(elements, r)) {
            Binding b{"s*", {{"s*", r}}};
            if (auto s = lowest_in(g.open_mask(r) & dprime)) b.roles["x_s*"] = *s;
            return b;
        }
        int t = lay.gadget_of[r];
        if (t < 0 || matched[t]) return std::nullopt;
        std::string cls = kLetters[lay.letter_of[r]];
        if (fb.kind == "D3" && fb.roles.at("a_k") != lay.gadget[t][0]) cls += "/other";
        Binding b{cls, {}};
        bind_gadget(b, lay, t, "_i");
        return b;
    };
    return compile_strategy(g, spec);
}

// Interactive defence

Defender Defender::with_oracle(const Graph& g, int k, const OracleOptions& opt)
{
    if (k < 1 || k > g.order()) throw PreconditionError("k must lie in 1..n");
    auto res = medn_feasible(g, k, opt);
    if (res.outcome == Feasibility::unknown) throw BudgetExceeded(res.work);
    if (res.outcome == Feasibility::infeasible) throw PreconditionError("infeasible: " + std::to_string(k) + " guards cannot defend this graph");
    Defender d(g, k, DefenderMode::oracle);
    d.winning_ = std::move(res.winning);
    d.config_ = d.winning_.configs.front();
    return d;
}

Defender Defender::with_strategy(const Graph& g, DefenseStrategy s)
{
    s.reindex();
    auto rep = verify_closure(g, s);
    if (!rep.proven) throw PreconditionError("strategy is not proven: " + rep.summary());
    Defender d(g, s.k, DefenderMode::strategy);
    d.config_ = s.initial;
    d.strategy_ = std::move(s);
    return d;
}

DefenseStep Defender::attack(Vertex r)
{
    if (!g_.contains(r)) throw InputError("attack on nonexistent vertex " + std::to_string(r));
    DefenseStep step;
    step.attack = r;
    GuardConfig next = config_;
    if (mode_ == DefenderMode::oracle) {
        if (!has(config_, r)) {
            auto s = safe_successor(g_, winning_, config_, r);
            if (!s) throw InconsistencyError("winning set has no safe successor");
            next = *s;
            step.moves = *guards_move(g_, config_, next);
        }
    } else {
        const Family* fam = strategy_.classify(config_);
        const Rule* rule = fam ? strategy_.rule(fam->id, r) : nullptr;
        if (rule) {
            step.moves = rule->moves;
            for (const Move& m : rule->moves) next = (next & ~bit(m.from)) | bit(m.to);
        } else if (!has(config_, r)) {
            throw InconsistencyError("strategy has no answer for this attack");
        }
    }
    if (!has(next, r) || !is_dominating(g_, next) || !guards_move_reachable(g_, config_, next))
        throw InconsistencyError("defender produced an illegal response");
    config_ = next;
    step.config = next;
    history_.push_back(step);
    return step;
}

void Defender::resume(GuardConfig c, std::vector<DefenseStep> history)
{
    bool known = mode_ == DefenderMode::oracle ? winning_.contains(c) : strategy_.classify(c) != nullptr;
    if (!known) throw InputError("saved configuration is not a position of this defence");
    config_ = c;
    history_ = std::move(history);
}

}  // namespace edom
