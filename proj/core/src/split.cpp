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

#include "edom/split.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "edom/errors.hpp"

namespace edom {

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_independent(const Graph& g, const std::vector<Vertex>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return false;
    return true;
}

void require_valid(const Graph& g, const SplitPartition& p)
{
    if (!is_valid_split_partition(g, p)) throw PreconditionError("partition is not a valid split partition");
}

}  // namespace

SplitPartition make_partition(const Graph& g, std::vector<Vertex> clique)
{
    std::sort(clique.begin(), clique.end());
    SplitPartition p;
    std::vector<char> in_c(g.order(), 0);
    for (Vertex v : clique) in_c[v] = 1;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!in_c[v]) p.independent.push_back(v);
    p.clique = std::move(clique);
    for (Vertex v : p.clique) p.delta_i = std::max(p.delta_i, independent_degree(g, p, v));
    return p;
}

std::optional<SplitPartition> split_partition(const Graph& g)
{
    const int n = g.order();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i) m = i + 1;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 0; i < n; ++i) (i < m ? lhs : rhs) += g.degree(order[i]);
    if (lhs != rhs) return std::nullopt;

    std::vector<Vertex> clique(order.begin(), order.begin() + m);
    std::sort(clique.begin(), clique.end());
    std::vector<char> in_c(n, 0);
    for (Vertex v : clique) in_c[v] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (in_c[v]) continue;
            bool sees_all = std::all_of(clique.begin(), clique.end(),
                                        [&](Vertex c) { return g.adjacent(v, c); });
            if (sees_all) {
                clique.insert(std::lower_bound(clique.begin(), clique.end(), v), v);
                in_c[v] = 1;
                changed = true;
                break;
            }
        }
    }
    SplitPartition p = make_partition(g, clique);
    if (!is_valid_split_partition(g, p))
        throw InconsistencyError("degree-sequence split test accepted a graph without a valid partition");
    return p;
}

bool is_valid_split_partition(const Graph& g, const SplitPartition& p)
{
    std::vector<int> seen(g.order(), 0);
    for (Vertex v : p.clique) {
        if (!g.contains(v)) return false;
        ++seen[v];
    }
    for (Vertex v : p.independent) {
        if (!g.contains(v)) return false;
        ++seen[v];
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return false;
    if (!is_clique(g, p.clique) || !is_independent(g, p.independent)) return false;
    for (Vertex v : p.independent) {
        bool sees_all = std::all_of(p.clique.begin(), p.clique.end(),
                                    [&](Vertex c) { return g.adjacent(v, c); });
        if (sees_all) return false;
    }
    return true;
}

std::vector<SplitPartition> all_split_partitions(const Graph& g)
{
    const int n = g.order();
    if (n > 20) throw PreconditionError("partition enumeration limited to 20 vertices");
    std::vector<SplitPartition> out;
    std::vector<Vertex> current;
    std::function<void(Vertex)> grow = [&](Vertex next) {
        SplitPartition p = make_partition(g, current);
        if (is_valid_split_partition(g, p)) out.push_back(p);
        for (Vertex v = next; v < n; ++v) {
            bool ok = std::all_of(current.begin(), current.end(), [&](Vertex c) { return g.adjacent(v, c); });
            if (!ok) continue;
            current.push_back(v);
            grow(v + 1);
            current.pop_back();
        }
    };
    grow(0);
    return out;
}

int independent_degree(const Graph& g, const SplitPartition& p, Vertex v)
{
    return static_cast<int>(independent_neighbors(g, p, v).size());
}

std::vector<Vertex> independent_neighbors(const Graph& g, const SplitPartition& p, Vertex v)
{
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
        if (std::binary_search(p.independent.begin(), p.independent.end(), w)) out.push_back(w);
    return out;
}

bool is_k1t_free(const Graph& g, int t)
{
    if (t < 1) throw PreconditionError("t must be positive");
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        if (static_cast<int>(nb.size()) < t) continue;
        // search for t pairwise non-adjacent neighbours
        std::vector<Vertex> chosen;
        std::function<bool(std::size_t)> search = [&](std::size_t from) {
            if (static_cast<int>(chosen.size()) == t) return true;
            if (static_cast<int>(chosen.size() + (nb.size() - from)) < t) return false;
            for (std::size_t i = from; i < nb.size(); ++i) {
                Vertex w = nb[i];
                bool ok = std::none_of(chosen.begin(), chosen.end(), [&](Vertex c) { return g.adjacent(c, w); });
                if (!ok) continue;
                chosen.push_back(w);
                if (search(i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (search(0)) return false;
    }
    return true;
}

namespace {

bool shares_with_all_others(const Graph& g, const SplitPartition& p, Vertex v)
{
    auto nv = independent_neighbors(g, p, v);
    for (Vertex u : p.clique) {
        if (u == v) continue;
        auto nu = independent_neighbors(g, p, u);
        std::vector<Vertex> common;
        std::set_intersection(nv.begin(), nv.end(), nu.begin(), nu.end(), std::back_inserter(common));
        if (common.empty()) return false;
    }
    return true;
}

}  // namespace

bool claw_free_split_check(const Graph& g, const SplitPartition& p)
{
    require_valid(g, p);
    if (p.delta_i <= 1) return true;
    if (p.delta_i > 2) return false;
    for (Vertex v : p.clique)
        if (independent_degree(g, p, v) == 2 && !shares_with_all_others(g, p, v)) return false;
    return true;
}

bool k14_free_3split_check(const Graph& g, const SplitPartition& p)
{
    require_valid(g, p);
    if (p.delta_i != 3) throw PreconditionError("k14_free_3split_check needs delta_i == 3");
    for (Vertex v : p.clique)
        if (independent_degree(g, p, v) == 3 && !shares_with_all_others(g, p, v)) return false;
    return true;
}

}  // namespace edom
