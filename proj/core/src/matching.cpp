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

#include "edom/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "edom/errors.hpp"

namespace edom {

LabeledGraph build_labeled_graph(const Graph& g, const std::vector<Vertex>& clique,
                                 const std::vector<Vertex>& independent)
{
    std::vector<char> in_i(g.order(), 0);
    for (Vertex v : independent) in_i[v] = 1;
    std::map<std::pair<Vertex, Vertex>, Vertex> label;
    for (Vertex c : clique) {
        std::vector<Vertex> nb;
        for (Vertex w : g.neighbors(c))
            if (in_i[w]) nb.push_back(w);
        if (nb.size() > 2)
            throw PreconditionError("clique vertex " + std::to_string(c) + " has more than two independent neighbours");
        if (nb.size() == 2) {
            auto key = std::minmax(nb[0], nb[1]);
            auto it = label.find(key);
            if (it == label.end() || c < it->second) label[key] = c;
        }
    }
    LabeledGraph m;
    m.vertices = independent;
    std::sort(m.vertices.begin(), m.vertices.end());
    for (const auto& [key, c] : label) m.edges.push_back({key.first, key.second, c});
    return m;
}

LabeledGraph build_labeled_graph(const Graph& h, const SplitPartition& p)
{
    if (!is_valid_split_partition(h, p)) throw PreconditionError("partition is not a valid split partition");
    return build_labeled_graph(h, p.clique, p.independent);
}

std::vector<Vertex> maximum_matching(int n, const std::vector<Edge>& edges)
{
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<Vertex> match(n, -1), parent(n), base(n);
    std::vector<char> used(n), blossom(n);

    auto lca = [&](Vertex a, Vertex b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] < 0) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    };
    auto mark_path = [&](Vertex v, Vertex b, Vertex child) {
        while (base[v] != b) {
            blossom[base[v]] = blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };
    auto find_path = [&](Vertex root) -> Vertex {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (Vertex i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
                    Vertex cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (Vertex i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] < 0) {
                    parent[to] = v;
                    if (match[to] < 0) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (match[root] >= 0) continue;
        Vertex u = find_path(root);
        while (u >= 0) {
            Vertex pv = parent[u];
            Vertex next = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = next;
        }
    }
    return match;
}

std::vector<LabeledEdge> max_matching(const LabeledGraph& m)
{
    std::map<Vertex, int> index;
    for (std::size_t i = 0; i < m.vertices.size(); ++i) index[m.vertices[i]] = static_cast<int>(i);
    std::vector<Edge> local;
    for (const auto& e : m.edges) local.emplace_back(index.at(e.u), index.at(e.v));
    auto mate = maximum_matching(static_cast<int>(m.vertices.size()), local);
    std::vector<LabeledEdge> out;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        auto [a, b] = local[i];
        if (mate[a] == b) {
            out.push_back(m.edges[i]);
            mate[a] = mate[b] = -1;
        }
    }
    return out;
}

int brute_force_matching_size(int n, const std::vector<Edge>& edges)
{
    int best = 0;
    std::vector<char> used(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int size) {
        best = std::max(best, size);
        if (size + static_cast<int>(edges.size() - i) <= best) return;
        for (std::size_t j = i; j < edges.size(); ++j) {
            auto [u, v] = edges[j];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = 1;
            rec(j + 1, size + 1);
            used[u] = used[v] = 0;
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace edom
