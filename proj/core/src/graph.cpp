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

#include "edom/graph.hpp"

#include <algorithm>
#include <numeric>

#include "edom/errors.hpp"

namespace edom {

Graph::Graph(int n)
{
    if (n < 0) throw InputError("negative vertex count");
    adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (!contains(u) || !contains(v)) {
        throw InputError("vertex id out of range in edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) return;
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++m_;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const
{
    if (adj_.empty()) return 0;
    int d = order();
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
}

Mask Graph::open_mask(Vertex v) const
{
    if (!fits_mask()) throw PreconditionError("graph has more than 64 vertices");
    return to_mask(adj_[v]);
}

Mask Graph::closed_mask(Vertex v) const { return open_mask(v) | bit(v); }

void Graph::set_label(Vertex v, std::string name)
{
    if (!contains(v)) throw InputError("label for unknown vertex " + std::to_string(v));
    labels_[v] = std::move(name);
}

std::string Graph::name(Vertex v) const
{
    auto it = labels_.find(v);
    return it == labels_.end() ? std::to_string(v) : it->second;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    InducedSubgraph out{Graph(static_cast<int>(vertices.size())), {vertices.begin(), vertices.end()}};
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            int j = index[w];
            if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<Vertex>(i), j);
        }
        auto it = g.labels().find(vertices[i]);
        if (it != g.labels().end()) out.graph.set_label(static_cast<Vertex>(i), it->second);
    }
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(g.order(), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
    return out;
}

bool is_complete(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_star(const Graph& g)
{
    const int n = g.order();
    if (n < 2 || g.size() != static_cast<std::size_t>(n - 1)) return false;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) {
            for (Vertex w = 0; w < n; ++w)
                if (w != v && g.degree(w) != 1) return false;
            return true;
        }
    return false;
}

std::vector<Vertex> universal_vertices(const Graph& g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) out.push_back(v);
    return out;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n)
{
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

}  // namespace edom
