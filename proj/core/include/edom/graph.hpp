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

#ifndef EDOM_GRAPH_HPP
#define EDOM_GRAPH_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edom/bits.hpp"

namespace edom {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
 * Self-loops are rejected and parallel edges collapse.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    void add_edge(Vertex u, Vertex v);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool contains(Vertex v) const { return v >= 0 && v < order(); }

    /** Edges with u < v, sorted lexicographically. */
    std::vector<Edge> edges() const;

    int max_degree() const;
    int min_degree() const;

    /** Closed neighborhood as a bitmask; requires order() <= 64. */
    Mask closed_mask(Vertex v) const;
    Mask open_mask(Vertex v) const;
    bool fits_mask() const { return order() <= kMaxMaskVertices; }

    const std::map<Vertex, std::string>& labels() const { return labels_; }
    void set_label(Vertex v, std::string name);
    std::string name(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
    std::map<Vertex, std::string> labels_;
};

/** Subgraph induced by a vertex list, renumbered 0..k-1 in list order. */
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;  // new id -> old id
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/** Components ordered by smallest vertex; each sorted ascending. */
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/** Disjoint union; the second graph's ids are shifted by a.order(). */
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_complete(const Graph& g);
/** K_{1,t} with t >= 1 (K2 counts as a star). */
bool is_star(const Graph& g);
/** Vertices adjacent to every other vertex. */
std::vector<Vertex> universal_vertices(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph empty_graph(int n);

}  // namespace edom

#endif
