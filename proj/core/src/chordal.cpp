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

#include "edom/chordal.hpp"

#include <algorithm>
#include <functional>
#include <list>
#include <numeric>
#include <set>
#include <tuple>

#include "edom/errors.hpp"

namespace edom {

std::vector<Vertex> lex_bfs(const Graph& g)
{
    const int n = g.order();
    // partition refinement over an ordered list of cells
    std::list<std::vector<Vertex>> cells;
    if (n == 0) return {};
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    cells.push_back(all);
    std::vector<char> done(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    while (!cells.empty()) {
        auto& first = cells.front();
        Vertex v = first.front();
        first.erase(first.begin());
        if (first.empty()) cells.pop_front();
        done[v] = 1;
        order.push_back(v);
        std::vector<char> nb(n, 0);
        for (Vertex w : g.neighbors(v)) nb[w] = 1;
        for (auto it = cells.begin(); it != cells.end(); ++it) {
            std::vector<Vertex> in, out;
            for (Vertex w : *it) (nb[w] ? in : out).push_back(w);
            if (!in.empty() && !out.empty()) {
                *it = out;
                cells.insert(it, in);
            }
        }
    }
    return order;
}

std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g)
{
    auto order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    const int n = g.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        // later neighbours must form a clique; check against the earliest one
        Vertex parent = -1;
        for (Vertex w : g.neighbors(v))
            if (pos[w] > i && (parent < 0 || pos[w] < pos[parent])) parent = w;
        if (parent < 0) continue;
        for (Vertex w : g.neighbors(v))
            if (pos[w] > i && w != parent && !g.adjacent(parent, w)) return std::nullopt;
    }
    return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g)
{
    auto peo = perfect_elimination_ordering(g);
    if (!peo) throw PreconditionError("graph is not chordal");
    const int n = g.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[(*peo)[i]] = i;
    std::vector<std::vector<Vertex>> candidates;
    for (int i = 0; i < n; ++i) {
        Vertex v = (*peo)[i];
        std::vector<Vertex> c{v};
        for (Vertex w : g.neighbors(v))
            if (pos[w] > i) c.push_back(w);
        std::sort(c.begin(), c.end());
        candidates.push_back(std::move(c));
    }
    std::vector<std::vector<Vertex>> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
            if (i == j) continue;
            const auto& a = candidates[i];
            const auto& b = candidates[j];
            if (b.size() < a.size() || (b.size() == a.size() && j > i)) continue;
            if (std::includes(b.begin(), b.end(), a.begin(), a.end())) dominated = true;
        }
        if (!dominated) out.push_back(candidates[i]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
};

int intersection_size(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    int k = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else {
            ++k;
            ++i;
            ++j;
        }
    }
    return k;
}

struct WeightedEdge {
    int w, i, j;
};

// Search state for choosing a maximum spanning tree whose vertex subtrees are paths.
class PathTreeSearch {
public:
    PathTreeSearch(const Graph& g, const std::vector<std::vector<Vertex>>& nodes,
                   std::vector<WeightedEdge> edges, long budget)
        : nodes_(nodes), edges_(std::move(edges)), budget_(budget),
          degree_(g.order(), std::vector<int>(nodes.size(), 0))
    {
        UnionFind uf(static_cast<int>(nodes_.size()));
        int components = static_cast<int>(nodes_.size());
        for (const auto& e : edges_) {
            int a = uf.find(e.i), b = uf.find(e.j);
            if (a != b) {
                uf.parent[a] = b;
                --components;
            }
            expected_.push_back(components);
        }
    }

    bool run(std::vector<std::pair<int, int>>& chosen)
    {
        chosen_.clear();
        std::vector<int> parent(nodes_.size());
        std::iota(parent.begin(), parent.end(), 0);
        if (nodes_.size() <= 1) return true;
        if (!step(0, parent)) return false;
        chosen = chosen_;
        return true;
    }

private:
    static int find(std::vector<int>& p, int x)
    {
        while (p[x] != x) x = p[x];
        return x;
    }

    bool keeps_paths(const WeightedEdge& e) const
    {
        bool ok = true;
        const auto& a = nodes_[e.i];
        const auto& b = nodes_[e.j];
        std::size_t x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
            if (a[x] < b[y]) ++x;
            else if (b[y] < a[x]) ++y;
            else {
                Vertex v = a[x];
                if (degree_[v][e.i] >= 2 || degree_[v][e.j] >= 2) ok = false;
                ++x;
                ++y;
            }
        }
        return ok;
    }

    void apply(const WeightedEdge& e, int delta)
    {
        const auto& a = nodes_[e.i];
        const auto& b = nodes_[e.j];
        std::size_t x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
            if (a[x] < b[y]) ++x;
            else if (b[y] < a[x]) ++y;
            else {
                degree_[a[x]][e.i] += delta;
                degree_[a[x]][e.j] += delta;
                ++x;
                ++y;
            }
        }
    }

    // Kruskal with branching: inside one weight class any cycle-free edge may
    // be taken or skipped, but at the end of each class the component count
    // must match plain Kruskal, which keeps every finished tree maximum.
    bool step(std::size_t idx, std::vector<int>& parent)
    {
        if (--budget_ < 0) return false;
        if (idx > 0 && (idx == edges_.size() || edges_[idx].w != edges_[idx - 1].w)) {
            int components = static_cast<int>(nodes_.size() - chosen_.size());
            if (components != expected_[idx - 1]) return false;
        }
        if (chosen_.size() + 1 >= nodes_.size()) return true;
        if (idx >= edges_.size()) return false;
        const auto& e = edges_[idx];
        int ri = find(parent, e.i), rj = find(parent, e.j);
        if (ri != rj && keeps_paths(e)) {
            auto saved = parent;
            parent[ri] = rj;
            chosen_.emplace_back(e.i, e.j);
            apply(e, +1);
            if (step(idx + 1, parent)) return true;
            apply(e, -1);
            chosen_.pop_back();
            parent = saved;
        }
        return step(idx + 1, parent);
    }

    const std::vector<std::vector<Vertex>>& nodes_;
    std::vector<WeightedEdge> edges_;
    long budget_;
    std::vector<std::vector<int>> degree_;  // degree_[v][node]: tree edges at node inside v's subtree
    std::vector<std::pair<int, int>> chosen_;
    std::vector<int> expected_;  // plain Kruskal component count after edge i
};

}  // namespace

std::optional<CliqueTree> clique_tree(const Graph& g, long search_budget)
{
    if (!is_chordal(g)) return std::nullopt;
    CliqueTree t;
    t.nodes = maximal_cliques(g);
    const int k = static_cast<int>(t.nodes.size());
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.push_back({intersection_size(t.nodes[i], t.nodes[j]), i, j});
    std::stable_sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return a.w != b.w ? a.w > b.w : std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });

    std::vector<std::pair<int, int>> chosen;
    PathTreeSearch search(g, t.nodes, edges, search_budget);
    if (!search.run(chosen)) {
        chosen.clear();
        UnionFind uf(k);
        for (const auto& e : edges) {
            int a = uf.find(e.i), b = uf.find(e.j);
            if (a == b) continue;
            uf.parent[a] = b;
            chosen.emplace_back(e.i, e.j);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    t.tree_edges = chosen;
    auto check = validate_clique_tree(g, t);
    if (!check.ok) throw InconsistencyError("clique tree construction failed: " + check.message);
    return t;
}

CliqueTreeCheck validate_clique_tree(const Graph& g, CliqueTree& t)
{
    CliqueTreeCheck r;
    if (!is_chordal(g)) {
        r.message = "graph is not chordal";
        return r;
    }
    auto expected = maximal_cliques(g);
    auto nodes = t.nodes;
    for (auto& c : nodes) std::sort(c.begin(), c.end());
    auto sorted_nodes = nodes;
    std::sort(sorted_nodes.begin(), sorted_nodes.end());
    if (sorted_nodes != expected) {
        r.message = "nodes are not exactly the maximal cliques";
        return r;
    }
    const int k = static_cast<int>(nodes.size());
    if (static_cast<int>(t.tree_edges.size()) != std::max(0, k - 1)) {
        r.message = "edge count is not nodes-1";
        return r;
    }
    UnionFind uf(std::max(k, 1));
    std::vector<std::vector<int>> adj(k);
    for (auto [a, b] : t.tree_edges) {
        if (a < 0 || b < 0 || a >= k || b >= k || a == b) {
            r.message = "tree edge out of range";
            return r;
        }
        int x = uf.find(a), y = uf.find(b);
        if (x == y) {
            r.message = "tree edges contain a cycle";
            return r;
        }
        uf.parent[x] = y;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    t.vertex_paths.assign(g.order(), {});
    bool paths = true;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<char> member(k, 0);
        std::vector<int> mine;
        for (int i = 0; i < k; ++i)
            if (std::binary_search(nodes[i].begin(), nodes[i].end(), v)) {
                member[i] = 1;
                mine.push_back(i);
            }
        if (mine.empty()) {
            r.message = "vertex " + std::to_string(v) + " in no clique";
            return r;
        }
        // connectivity of the induced subtree and degree profile
        int end = mine.front();
        bool is_path = true;
        for (int i : mine) {
            int d = 0;
            for (int j : adj[i]) d += member[j];
            if (d > 2) is_path = false;
            if (d <= 1) end = i;
        }
        std::vector<int> walk;
        std::vector<char> seen(k, 0);
        std::vector<int> stack{end};
        seen[end] = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            walk.push_back(i);
            for (int j : adj[i])
                if (member[j] && !seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        if (walk.size() != mine.size()) {
            r.message = "cliques containing vertex " + std::to_string(v) + " are not connected";
            return r;
        }
        t.vertex_paths[v] = is_path ? walk : mine;
        paths = paths && is_path;
    }
    for (auto [u, v] : g.edges()) {
        bool inside = std::any_of(nodes.begin(), nodes.end(), [&](const std::vector<Vertex>& c) {
            return std::binary_search(c.begin(), c.end(), u) && std::binary_search(c.begin(), c.end(), v);
        });
        if (!inside) {
            r.message = "edge not covered by a clique";
            return r;
        }
    }
    t.path_property = paths;
    r.ok = true;
    r.path_property = paths;
    return r;
}

std::vector<Vertex> chordal_max_independent_set(const Graph& g)
{
    auto peo = perfect_elimination_ordering(g);
    if (!peo) throw PreconditionError("graph is not chordal");
    std::vector<char> blocked(g.order(), 0);
    std::vector<Vertex> out;
    for (Vertex v : *peo) {
        if (blocked[v]) continue;
        out.push_back(v);
        for (Vertex w : g.neighbors(v)) blocked[w] = 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace edom
