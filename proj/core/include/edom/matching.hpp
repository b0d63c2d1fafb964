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

#ifndef EDOM_MATCHING_HPP
#define EDOM_MATCHING_HPP

#include <vector>

#include "edom/graph.hpp"
#include "edom/split.hpp"

namespace edom {

struct LabeledEdge {
    Vertex u;  // u < v
    Vertex v;
    Vertex label;  // least-id common clique neighbour
    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/** Auxiliary graph on an independent set: pairs sharing a clique neighbour. */
struct LabeledGraph {
    std::vector<Vertex> vertices;
    std::vector<LabeledEdge> edges;  // sorted by (u, v)
};

/**
 * Labeled graph on p.independent. Throws PreconditionError when some clique
 * vertex has more than two independent neighbours.
 */
LabeledGraph build_labeled_graph(const Graph& h, const SplitPartition& p);

/** Same, for an arbitrary clique / independent subset of g. */
LabeledGraph build_labeled_graph(const Graph& g, const std::vector<Vertex>& clique,
                                 const std::vector<Vertex>& independent);

/**
 * Maximum cardinality matching (Edmonds' blossom algorithm). Returns the mate
 * of each vertex or -1. Edges are scanned in the given order and roots in
 * ascending id order.
 */
std::vector<Vertex> maximum_matching(int n, const std::vector<Edge>& edges);

/** Maximum matching of a labeled graph, as a subset of its edges. */
std::vector<LabeledEdge> max_matching(const LabeledGraph& m);

/** Largest matching by exhaustive search, for cross-checking. */
int brute_force_matching_size(int n, const std::vector<Edge>& edges);

}  // namespace edom

#endif
