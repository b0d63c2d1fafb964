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

#ifndef EDOM_CHORDAL_HPP
#define EDOM_CHORDAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "edom/graph.hpp"

namespace edom {

/** Lexicographic BFS visiting order, starting from vertex 0. */
std::vector<Vertex> lex_bfs(const Graph& g);

/** Perfect elimination ordering (reverse LexBFS) if g is chordal. */
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g);
bool is_chordal(const Graph& g);

/** Maximal cliques of a chordal graph, each sorted, list sorted lexicographically. */
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

struct CliqueTree {
    std::vector<std::vector<Vertex>> nodes;
    std::vector<std::pair<int, int>> tree_edges;  // (i, j) with i < j
    std::vector<std::vector<int>> vertex_paths;   // per vertex: nodes containing it
    bool path_property = false;
};

/**
 * Clique tree from a maximum-weight spanning tree of the clique intersection
 * graph. Edges are taken by weight, then (i, j) order. Among the equally heavy
 * choices a bounded search looks for one whose vertex subtrees are all paths;
 * if none is found in budget the plain Kruskal tree is returned.
 */
std::optional<CliqueTree> clique_tree(const Graph& g, long search_budget = 200000);

/** Result of checking a tree against the clique-tree invariants. */
struct CliqueTreeCheck {
    bool ok = false;
    bool path_property = false;
    std::string message;
};

/**
 * Validates nodes == maximal cliques, edges form a tree, vertex subtrees are
 * connected; reports whether they are also paths. Fills vertex_paths in
 * path order when possible.
 */
CliqueTreeCheck validate_clique_tree(const Graph& g, CliqueTree& t);

/** Maximum independent set of a chordal graph (greedy along a PEO). */
std::vector<Vertex> chordal_max_independent_set(const Graph& g);

}  // namespace edom

#endif
