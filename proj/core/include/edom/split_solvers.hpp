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

#ifndef EDOM_SPLIT_SOLVERS_HPP
#define EDOM_SPLIT_SOLVERS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "edom/graph.hpp"
#include "edom/matching.hpp"
#include "edom/split.hpp"

namespace edom {

/**
 * Value for a connected claw-free split graph that is not complete: |I| + 1
 * if the I-neighbourhoods miss part of C, else |I|. P3 is the only star
 * accepted.
 */
int solve_k13_free(const Graph& g, const SplitPartition& p);

/** Matching reduction shared by the 2-split and 3-split solvers. */
struct ReducedInstance {
    std::vector<Vertex> labels;       // L
    std::vector<Vertex> removed;      // independent neighbours of L
    std::vector<Vertex> iprime;       // I'
    std::vector<Vertex> clique;       // clique part of H'
    InducedSubgraph reduced;          // H' on clique u iprime
};

struct TwoSplitResult {
    int value = 0;
    LabeledGraph labeled;
    std::vector<LabeledEdge> matching;
    ReducedInstance reduced;
};

/** |L| + |I'| + 1 for a connected K_{1,4}-free split graph with delta_i == 2. */
TwoSplitResult solve_k14_2split(const Graph& h, const SplitPartition& p);

enum class QType { type_i, type_ii, neither };
std::string to_string(QType t);

/** How strictly the K_{1,2} + K_2 pattern of Type II is read. */
enum class TypeIIReading {
    edges,    // edges ac, bc, de present
    induced,  // additionally no edge dc, ae, be
};

struct BipartiteQ {
    std::vector<Vertex> a;                     // the three independent neighbours of x
    std::vector<Vertex> b;                     // L u N_{H'}(I')
    std::vector<std::pair<Vertex, Vertex>> edges;  // (a, b) adjacent in G
    std::map<Vertex, int> weight;              // b -> class id
};

struct QClassification {
    QType type = QType::neither;
    // Type I: three (a, b) pairs; Type II: (a, c), (b, c), (d, e)
    std::vector<std::pair<Vertex, Vertex>> witness;
};

struct ThreeSplitResult {
    int value = 0;
    Vertex x = -1;
    QClassification q_type;
    BipartiteQ q;
    LabeledGraph labeled;
    std::vector<LabeledEdge> matching;
    ReducedInstance reduced;
    std::string explanation;
};

/** Q for a chosen x; runs the removal, labelling and matching steps. */
BipartiteQ build_Q(const Graph& g, const SplitPartition& p, Vertex x);
QClassification classify_Q(const BipartiteQ& q, TypeIIReading reading = TypeIIReading::edges);

/**
 * |L| + |I'| + 1 if Q is Type I or II, else |L| + |I'| + 2, for a connected
 * K_{1,4}-free split graph with delta_i == 3. x defaults to the least clique
 * vertex with three independent neighbours. Throws InconsistencyError if the
 * reduced graph is not 2-split or the labeled matching exceeds 2.
 */
ThreeSplitResult solve_k14_3split(const Graph& g, const SplitPartition& p);
ThreeSplitResult solve_k14_3split(const Graph& g, const SplitPartition& p, Vertex x,
                                  TypeIIReading reading = TypeIIReading::edges);

struct AutoResult {
    int value = 0;
    std::string method;  // complete, star, k13, k14-2, k14-3, oracle-fallback
};

/** Dispatch over the solvers above; falls back to the oracle otherwise. */
AutoResult solve_split_auto(const Graph& g);

}  // namespace edom

#endif
