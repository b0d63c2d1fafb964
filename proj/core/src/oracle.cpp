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

#include "edom/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "edom/chordal.hpp"
#include "edom/errors.hpp"

namespace edom {

namespace {

void require_mask_graph(const Graph& g)
{
    if (!g.fits_mask()) throw PreconditionError("game operations support at most 64 vertices");
}

std::vector<Mask> closed_masks(const Graph& g)
{
    std::vector<Mask> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out[v] = g.closed_mask(v);
    return out;
}

Mask dominated_by(const std::vector<Mask>& closed, Mask s)
{
    Mask d = 0;
    for_each_bit(s, [&](Vertex v) { d |= closed[v]; });
    return d;
}

// Open-addressing index from config to position.
class ConfigIndex {
public:
    explicit ConfigIndex(const std::vector<Mask>& keys)
    {
        std::size_t cap = 16;
        while (cap < keys.size() * 2 + 1) cap <<= 1;
        slots_.assign(cap, kEmpty);
        keys_ = &keys;
        for (std::uint32_t i = 0; i < keys.size(); ++i) {
            std::size_t h = hash(keys[i]) & (cap - 1);
            while (slots_[h] != kEmpty) h = (h + 1) & (cap - 1);
            slots_[h] = i;
        }
    }

    std::uint32_t find(Mask key) const
    {
        std::size_t h = hash(key) & (slots_.size() - 1);
        while (slots_[h] != kEmpty) {
            if ((*keys_)[slots_[h]] == key) return slots_[h];
            h = (h + 1) & (slots_.size() - 1);
        }
        return kEmpty;
    }

    static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

private:
    static std::size_t hash(Mask x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }

    std::vector<std::uint32_t> slots_;
    const std::vector<Mask>* keys_ = nullptr;
};

class BudgetCounter {
public:
    explicit BudgetCounter(std::uint64_t limit) : limit_(limit) {}
    bool spend(std::uint64_t n = 1)
    {
        used_ += n;
        return used_ <= limit_;
    }
    bool exhausted() const { return used_ > limit_; }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

// Dominating k-subsets in increasing-id DFS order.
bool enumerate_dominating(const Graph& g, int k, const std::vector<Mask>& closed, BudgetCounter& budget,
                          std::vector<Mask>& out)
{
    const int n = g.order();
    const Mask full = full_mask(n);
    std::vector<int> last_dominator(n);
    for (Vertex v = 0; v < n; ++v) last_dominator[v] = 63 - std::countl_zero(closed[v]);
    bool ok = true;
    std::function<void(Vertex, int, Mask, Mask)> rec = [&](Vertex next, int left, Mask chosen, Mask dom) {
        if (!ok) return;
        if (!budget.spend()) {
            ok = false;
            return;
        }
        if (left == 0) {
            if (dom == full) out.push_back(chosen);
            return;
        }
        // a vertex that only earlier ids can dominate is lost
        Mask undominated = full & ~dom;
        bool dead = false;
        for_each_bit(undominated, [&](Vertex u) { dead = dead || last_dominator[u] < next; });
        if (dead) return;
        for (Vertex v = next; v <= n - left; ++v) rec(v + 1, left - 1, chosen | bit(v), dom | closed[v]);
    };
    rec(0, k, 0, 0);
    return ok;
}

class FixedPoint {
public:
    FixedPoint(const Graph& g, int k, GuardModel model, BudgetCounter& budget)
        : g_(g), n_(g.order()), k_(k), model_(model), budget_(budget), closed_(closed_masks(g)), two_hop_(n_)
    {
        for (Vertex v = 0; v < n_; ++v) two_hop_[v] = dominated_by(closed_, closed_[v]);
    }

    // Returns false when the budget ran out.
    bool run(std::vector<Mask>& configs)
    {
        std::sort(configs.begin(), configs.end());
        configs_ = &configs;
        ConfigIndex index(configs);
        index_ = &index;
        alive_.assign(configs.size(), 1);
        witness_.assign(configs.size() * n_, ConfigIndex::kEmpty);
        for (bool changed = true; changed;) {
            changed = false;
            for (std::uint32_t i = 0; i < configs.size(); ++i) {
                if (!alive_[i]) continue;
                for (Vertex r = 0; r < n_; ++r) {
                    if (has(configs[i], r)) continue;
                    auto& w = witness_[static_cast<std::size_t>(i) * n_ + r];
                    if (w != ConfigIndex::kEmpty && alive_[w]) continue;
                    w = find_successor(configs[i], r);
                    if (budget_.exhausted()) return false;
                    if (w == ConfigIndex::kEmpty) {
                        alive_[i] = 0;
                        changed = true;
                        break;
                    }
                }
            }
        }
        std::vector<Mask> kept;
        for (std::uint32_t i = 0; i < configs.size(); ++i)
            if (alive_[i]) kept.push_back(configs[i]);
        configs.swap(kept);
        return true;
    }

private:
    std::uint32_t lookup(Mask t)
    {
        budget_.spend();
        std::uint32_t j = index_->find(t);
        return (j != ConfigIndex::kEmpty && alive_[j]) ? j : ConfigIndex::kEmpty;
    }

    std::uint32_t find_successor(Mask d, Vertex r)
    {
        if (model_ == GuardModel::one_guard) {
            std::uint32_t found = ConfigIndex::kEmpty;
            for_each_bit(d & closed_[r], [&](Vertex x) {
                if (found == ConfigIndex::kEmpty) found = lookup((d & ~bit(x)) | bit(r));
            });
            return found;
        }
        guards_.clear();
        for_each_bit(d, [&](Vertex v) { guards_.push_back(v); });
        for (int j = 0; j < k_; ++j) {
            if (!has(closed_[r], guards_[j])) continue;
            // remaining guards in order, with suffix unions of their 2-hop reach
            rest_.clear();
            for (int i = 0; i < k_; ++i)
                if (i != j) rest_.push_back(guards_[i]);
            reach_.assign(rest_.size() + 1, 0);
            for (int i = static_cast<int>(rest_.size()) - 1; i >= 0; --i)
                reach_[i] = reach_[i + 1] | two_hop_[rest_[i]];
            std::uint32_t found = assign(0, bit(r), closed_[r]);
            if (found != ConfigIndex::kEmpty || budget_.exhausted()) return found;
        }
        return ConfigIndex::kEmpty;
    }

    std::uint32_t assign(std::size_t i, Mask target, Mask dom)
    {
        if (i == rest_.size()) return lookup(target);
        if (!budget_.spend()) return ConfigIndex::kEmpty;
        const Mask full = full_mask(n_);
        if ((full & ~dom & ~reach_[i]) != 0) return ConfigIndex::kEmpty;
        Vertex x = rest_[i];
        Mask options = closed_[x] & ~target;
        // staying first keeps witnesses close to the source
        if (has(options, x)) {
            auto f = assign(i + 1, target | bit(x), dom | closed_[x]);
            if (f != ConfigIndex::kEmpty || budget_.exhausted()) return f;
            options &= ~bit(x);
        }
        std::uint32_t found = ConfigIndex::kEmpty;
        while (options && found == ConfigIndex::kEmpty && !budget_.exhausted()) {
            Vertex y = lowest(options);
            options &= options - 1;
            found = assign(i + 1, target | bit(y), dom | closed_[y]);
        }
        return found;
    }

    const Graph& g_;
    int n_;
    int k_;
    GuardModel model_;
    BudgetCounter& budget_;
    std::vector<Mask> closed_;
    std::vector<Mask> two_hop_;
    const std::vector<Mask>* configs_ = nullptr;
    const ConfigIndex* index_ = nullptr;
    std::vector<char> alive_;
    std::vector<std::uint32_t> witness_;
    std::vector<Vertex> guards_, rest_;
    std::vector<Mask> reach_;
};

}  // namespace

bool is_dominating(const Graph& g, std::span<const Vertex> s)
{
    std::vector<char> dom(g.order(), 0);
    for (Vertex v : s) {
        if (!g.contains(v)) throw PreconditionError("vertex outside graph");
        dom[v] = 1;
        for (Vertex w : g.neighbors(v)) dom[w] = 1;
    }
    return std::all_of(dom.begin(), dom.end(), [](char c) { return c != 0; });
}

bool is_dominating(const Graph& g, GuardConfig s)
{
    require_mask_graph(g);
    return dominated_by(closed_masks(g), s) == full_mask(g.order());
}

std::optional<std::vector<Move>> guards_move(const Graph& g, GuardConfig d, GuardConfig d2)
{
    require_mask_graph(g);
    if (popcount(d) != popcount(d2)) throw PreconditionError("configurations differ in size");
    auto from = to_vertices(d);
    auto to = to_vertices(d2);
    const int k = static_cast<int>(from.size());
    std::vector<int> match_to(k, -1), match_from(k, -1);
    // guards already on a target vertex stay put
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (from[i] == to[j]) {
                match_to[i] = j;
                match_from[j] = i;
            }
    std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
        for (int j = 0; j < k; ++j) {
            if (seen[j] || (from[i] != to[j] && !g.adjacent(from[i], to[j]))) continue;
            seen[j] = 1;
            if (match_from[j] < 0 || augment(match_from[j], seen)) {
                match_to[i] = j;
                match_from[j] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < k; ++i) {
        if (match_to[i] >= 0) continue;
        std::vector<char> seen(k, 0);
        if (!augment(i, seen)) return std::nullopt;
    }
    std::vector<Vertex> next(g.order(), -1);
    for (int i = 0; i < k; ++i)
        if (from[i] != to[match_to[i]]) next[from[i]] = to[match_to[i]];
    // cancel cycles: every vertex on one is both occupied and a target
    for (Vertex s : from) {
        Vertex v = next[s];
        for (int steps = 0; v >= 0 && v != s && steps <= k; ++steps) v = next[v];
        if (v != s) continue;
        for (Vertex w = s; next[w] >= 0;) {
            Vertex nx = next[w];
            next[w] = -1;
            w = nx;
        }
    }
    std::vector<Move> pending;
    for (Vertex s : from)
        if (next[s] >= 0) pending.push_back({s, next[s]});
    std::vector<Move> ordered;
    while (!pending.empty()) {
        for (std::size_t i = 0; i < pending.size(); ++i) {
            Vertex target = pending[i].to;
            bool blocked = std::any_of(pending.begin(), pending.end(), [&](const Move& m) { return m.from == target; });
            if (!blocked) {
                ordered.push_back(pending[i]);
                pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
                break;
            }
        }
    }
    return ordered;
}

bool guards_move_reachable(const Graph& g, GuardConfig d, GuardConfig d2)
{
    return guards_move(g, d, d2).has_value();
}

bool WinningSet::contains(GuardConfig c) const { return std::binary_search(configs.begin(), configs.end(), c); }

FeasibilityResult medn_feasible(const Graph& g, int k, const OracleOptions& opt)
{
    require_mask_graph(g);
    if (k < 1 || k > g.order()) throw PreconditionError("k must satisfy 1 <= k <= n");
    FeasibilityResult res;
    res.winning.k = k;
    BudgetCounter budget(opt.budget);
    auto closed = closed_masks(g);
    std::vector<Mask> configs;
    if (!enumerate_dominating(g, k, closed, budget, configs)) {
        res.work = budget.used();
        return res;
    }
    res.dominating_sets = configs.size();
    FixedPoint fp(g, k, opt.model, budget);
    if (!fp.run(configs)) {
        res.work = budget.used();
        return res;
    }
    res.work = budget.used();
    res.winning.configs = std::move(configs);
    res.outcome = res.winning.empty() ? Feasibility::infeasible : Feasibility::feasible;
    return res;
}

namespace {

int least_feasible(const Graph& comp, int from, const OracleOptions& opt, std::uint64_t& used)
{
    for (int k = std::max(1, from); k <= comp.order(); ++k) {
        OracleOptions local = opt;
        local.budget = opt.budget > used ? opt.budget - used : 0;
        auto r = medn_feasible(comp, k, local);
        used += r.work;
        if (r.outcome == Feasibility::unknown) throw BudgetExceeded(used);
        if (r.outcome == Feasibility::feasible) return k;
    }
    throw InconsistencyError("no feasible guard count up to n");
}

}  // namespace

int medn_oracle(const Graph& g, const OracleOptions& opt)
{
    require_mask_graph(g);
    if (g.order() == 0) throw PreconditionError("empty graph");
    OracleOptions o = opt;
    o.model = GuardModel::all_guards;
    std::uint64_t used = 0;
    int total = 0;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        total += least_feasible(sub.graph, gamma_exact(sub.graph), o, used);
    }
    return total;
}

EdnResult edn_oracle(const Graph& g, const OracleOptions& opt)
{
    require_mask_graph(g);
    if (g.order() == 0) throw PreconditionError("empty graph");
    OracleOptions o = opt;
    o.model = GuardModel::one_guard;
    std::uint64_t used = 0;
    EdnResult res;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        res.value += least_feasible(sub.graph, gamma_exact(sub.graph), o, used);
    }
    if (is_chordal(g)) {
        res.alpha = static_cast<int>(chordal_max_independent_set(g).size());
        if (*res.alpha != res.value)
            throw InconsistencyError("one-guard value " + std::to_string(res.value) +
                                     " differs from independence number " + std::to_string(*res.alpha));
    }
    return res;
}

std::vector<Vertex> min_dominating_set(const Graph& g)
{
    require_mask_graph(g);
    const int n = g.order();
    if (n == 0) return {};
    const Mask full = full_mask(n);
    auto closed = closed_masks(g);

    // greedy upper bound
    Mask best = 0, dom = 0;
    while (dom != full) {
        Vertex pick = 0;
        int gain = -1;
        for (Vertex v = 0; v < n; ++v) {
            int c = popcount(closed[v] & ~dom);
            if (c > gain) {
                gain = c;
                pick = v;
            }
        }
        best |= bit(pick);
        dom |= closed[pick];
    }
    int best_size = popcount(best);

    // undominated vertices with pairwise disjoint closed neighbourhoods need distinct dominators
    auto packing_bound = [&](Mask undominated) {
        int count = 0;
        while (undominated) {
            Vertex u = lowest(undominated);
            ++count;
            Mask near = 0;
            for_each_bit(closed[u], [&](Vertex w) { near |= closed[w]; });
            undominated &= ~near;
        }
        return count;
    };

    std::function<void(Mask, Mask)> rec = [&](Mask chosen, Mask dom) {
        int size = popcount(chosen);
        if (dom == full) {
            if (size < best_size) {
                best_size = size;
                best = chosen;
            }
            return;
        }
        Mask undominated = full & ~dom;
        if (size + packing_bound(undominated) >= best_size) return;
        // branch on the undominated vertex with fewest dominators
        Vertex u = -1;
        int fewest = n + 1;
        for_each_bit(undominated, [&](Vertex w) {
            int c = popcount(closed[w]);
            if (c < fewest) {
                fewest = c;
                u = w;
            }
        });
        std::vector<Vertex> cands = to_vertices(closed[u]);
        std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
            return popcount(closed[a] & undominated) > popcount(closed[b] & undominated);
        });
        for (Vertex v : cands) rec(chosen | bit(v), dom | closed[v]);
    };
    rec(0, 0);
    return to_vertices(best);
}

int gamma_exact(const Graph& g) { return static_cast<int>(min_dominating_set(g).size()); }

int alpha_exact(const Graph& g)
{
    require_mask_graph(g);
    const int n = g.order();
    std::vector<Mask> open(n);
    for (Vertex v = 0; v < n; ++v) open[v] = g.open_mask(v);
    int best = 0;
    std::function<void(Mask, int)> rec = [&](Mask cand, int size) {
        if (size + popcount(cand) <= best) return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        Vertex v = lowest(cand);
        rec(cand & ~bit(v) & ~open[v], size + 1);
        rec(cand & ~bit(v), size);
    };
    rec(full_mask(n), 0);
    return best;
}

std::optional<GuardConfig> safe_successor(const Graph& g, const WinningSet& w, GuardConfig current, Vertex r,
                                          GuardModel model)
{
    if (!g.contains(r)) throw PreconditionError("attack on a vertex outside the graph");
    if (has(current, r) && w.contains(current)) return current;
    for (GuardConfig c : w.configs) {
        if (!has(c, r)) continue;
        if (model == GuardModel::one_guard) {
            Mask diff = c ^ current;
            if (diff == 0) return c;
            if (popcount(diff) != 2) continue;
            Mask gone = current & diff, arrived = c & diff;
            if (g.adjacent(lowest(gone), lowest(arrived))) return c;
        } else if (guards_move_reachable(g, current, c)) {
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace edom
