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

#include "edom/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "edom/split.hpp"

namespace edom {

Graph random_graph(Rng& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_split_graph(Rng& rng, int c, int i, int max_i_degree)
{
    Graph g(c + i);
    for (Vertex u = 0; u < c; ++u)
        for (Vertex v = u + 1; v < c; ++v) g.add_edge(u, v);
    std::vector<int> load(c, 0);
    std::vector<Vertex> indep(i);
    std::iota(indep.begin(), indep.end(), c);
    for (Vertex u = 0; u < c; ++u) {
        int d = std::uniform_int_distribution<int>(0, std::min(max_i_degree, i))(rng);
        std::shuffle(indep.begin(), indep.end(), rng);
        for (int k = 0; k < d; ++k) {
            g.add_edge(u, indep[k]);
            ++load[u];
        }
    }
    for (Vertex v = c; v < c + i; ++v) {
        if (g.degree(v) > 0) continue;
        std::vector<Vertex> open;
        for (Vertex u = 0; u < c; ++u)
            if (load[u] < max_i_degree) open.push_back(u);
        if (open.empty()) continue;
        Vertex u = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        g.add_edge(u, v);
        ++load[u];
    }
    return g;
}

namespace {

bool usable(const Graph& g) { return g.order() >= 3 && is_connected(g) && !is_complete(g) && !is_star(g); }

}  // namespace

Graph random_k14_split(Rng& rng, int n_max, int want_delta)
{
    for (;;) {
        int c = std::uniform_int_distribution<int>(2, std::max(2, n_max - 3))(rng);
        int i = std::uniform_int_distribution<int>(want_delta, std::max(want_delta, n_max - c))(rng);
        if (c + i > n_max) continue;
        Graph g = random_split_graph(rng, c, i, want_delta);
        if (!usable(g)) continue;
        auto p = split_partition(g);
        if (!p || p->delta_i != want_delta || !is_k1t_free(g, 4)) continue;
        return g;
    }
}

Graph random_k14_3split_targeted(Rng& rng, int n_max)
{
    for (;;) {
        int c = std::uniform_int_distribution<int>(3, std::max(3, std::min(5, n_max - 5)))(rng);
        int extra = std::uniform_int_distribution<int>(2, std::max(2, n_max - c - 3))(rng);
        if (c + 3 + extra > n_max) continue;
        const Vertex a0 = c, e0 = c + 3;
        Graph g(c + 3 + extra);
        for (Vertex u = 0; u < c; ++u)
            for (Vertex v = u + 1; v < c; ++v) g.add_edge(u, v);
        for (int k = 0; k < 3; ++k) g.add_edge(0, a0 + k);
        std::uniform_int_distribution<int> pick_a(0, 2), pick_e(0, extra - 1), roll(0, 19);
        Vertex first = 1;
        int plant = roll(rng);
        if (plant < 6 && c >= 4 && extra >= 3) {
            for (int k = 0; k < 3; ++k) {
                g.add_edge(1 + k, a0 + k);
                g.add_edge(1 + k, e0 + k);
            }
            first = 4;
        } else if (plant < 13) {
            g.add_edge(1, a0);
            g.add_edge(1, a0 + 1);
            g.add_edge(1, e0);
            g.add_edge(2, a0 + 2);
            g.add_edge(2, e0 + 1);
            g.add_edge(2, a0);
            first = 3;
        }
        for (Vertex u = first; u < c; ++u) {
            int r = roll(rng);
            int a_count = r < 6 ? 2 : 1;
            int e_count = r < 4 ? 1 : r < 6 ? 0 : r < 16 ? 1 : r < 18 ? 2 : 0;
            for (int k = 0; k < a_count; ++k) g.add_edge(u, a0 + pick_a(rng));
            for (int k = 0; k < e_count; ++k) g.add_edge(u, e0 + pick_e(rng));
        }
        if (!usable(g)) continue;
        auto p = split_partition(g);
        if (!p || p->delta_i != 3 || !is_k1t_free(g, 4)) continue;
        return g;
    }
}

Graph random_claw_free_split(Rng& rng, int n_max)
{
    for (;;) {
        int c = std::uniform_int_distribution<int>(2, std::max(2, n_max - 1))(rng);
        int i = std::uniform_int_distribution<int>(1, std::max(1, n_max - c))(rng);
        if (c + i > n_max) continue;
        Graph g = random_split_graph(rng, c, i, std::uniform_int_distribution<int>(1, 2)(rng));
        if (!usable(g) || !split_partition(g) || !is_k1t_free(g, 3)) continue;
        return g;
    }
}

std::vector<Graph> claw_free_split_family(int n_max)
{
    // A claw-free split graph has at most two independent neighbours per
    // clique vertex, so it is fixed by |I| and the multiset of clique-vertex
    // types, a type being a subset of I of size <= 2.
    std::vector<Graph> out;
    for (int t = 1; t < n_max; ++t) {
        std::vector<std::vector<int>> types{{}};
        for (int a = 0; a < t; ++a) types.push_back({a});
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b) types.push_back({a, b});
        std::set<std::vector<int>> seen;
        for (int c = 1; c + t <= n_max; ++c) {
            std::vector<int> pick;
            std::function<void(int)> rec = [&](int from) {
                if (static_cast<int>(pick.size()) == c) {
                    // canonical form under permutations of I when t is small
                    std::vector<int> perm(t);
                    std::iota(perm.begin(), perm.end(), 0);
                    std::vector<int> best;
                    do {
                        std::vector<int> code;
                        for (int ty : pick) {
                            std::vector<int> mapped;
                            for (int a : types[ty]) mapped.push_back(perm[a]);
                            std::sort(mapped.begin(), mapped.end());
                            int id = static_cast<int>(std::find(types.begin(), types.end(), mapped) - types.begin());
                            code.push_back(id);
                        }
                        std::sort(code.begin(), code.end());
                        code.insert(code.begin(), c);
                        if (best.empty() || code < best) best = code;
                    } while (t <= 6 && std::next_permutation(perm.begin(), perm.end()));
                    if (!seen.insert(best).second) return;
                    Graph g(c + t);
                    for (Vertex u = 0; u < c; ++u)
                        for (Vertex v = u + 1; v < c; ++v) g.add_edge(u, v);
                    for (int k = 0; k < c; ++k)
                        for (int a : types[pick[k]]) g.add_edge(k, c + a);
                    if (!usable(g)) return;
                    auto p = split_partition(g);
                    if (!p || !is_k1t_free(g, 3)) return;
                    out.push_back(std::move(g));
                    return;
                }
                for (int ty = from; ty < static_cast<int>(types.size()); ++ty) {
                    pick.push_back(ty);
                    rec(ty);
                    pick.pop_back();
                }
            };
            rec(0);
        }
    }
    return out;
}

std::vector<Graph> small_graph_classes()
{
    std::vector<Graph> out;
    out.push_back(Graph(1));
    out.push_back(Graph(2));
    out.push_back(complete_graph(2));
    out.push_back(Graph(3));
    Graph k2k1(3);
    k2k1.add_edge(0, 1);
    out.push_back(k2k1);
    out.push_back(path_graph(3));
    out.push_back(complete_graph(3));
    return out;
}

}  // namespace edom
