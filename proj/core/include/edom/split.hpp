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

#ifndef EDOM_SPLIT_HPP
#define EDOM_SPLIT_HPP

#include <optional>
#include <vector>

#include "edom/graph.hpp"

namespace edom {

/** V = C u I with C a maximal clique and I independent. */
struct SplitPartition {
    std::vector<Vertex> clique;       // sorted
    std::vector<Vertex> independent;  // sorted
    int delta_i = 0;                  // max over C of |N(v) n I|
};

/**
 * Hammer-Simeone recognition with ascending-id tie-break, followed by moving
 * I-vertices that see all of C into C until C is maximal.
 */
std::optional<SplitPartition> split_partition(const Graph& g);

/** Checks the SplitPartition invariants including maximality of C. */
bool is_valid_split_partition(const Graph& g, const SplitPartition& p);

/** Every valid maximal-C partition, by brute force over cliques (n <= 20). */
std::vector<SplitPartition> all_split_partitions(const Graph& g);

/** Builds a partition from a clique list, computing I and delta_i. */
SplitPartition make_partition(const Graph& g, std::vector<Vertex> clique);

/** |N(v) n I| for a clique vertex. */
int independent_degree(const Graph& g, const SplitPartition& p, Vertex v);
std::vector<Vertex> independent_neighbors(const Graph& g, const SplitPartition& p, Vertex v);

/** True iff no vertex has t pairwise non-adjacent neighbors. */
bool is_k1t_free(const Graph& g, int t);

/**
 * Claw-freeness via the split characterisation: delta_i <= 1, or delta_i == 2
 * and every v with two I-neighbours shares an I-neighbour with every other
 * clique vertex. Throws PreconditionError on an invalid partition.
 */
bool claw_free_split_check(const Graph& g, const SplitPartition& p);

/**
 * K_{1,4}-freeness of a 3-split graph: every v with three I-neighbours shares
 * an I-neighbour with every other clique vertex. Requires delta_i == 3.
 */
bool k14_free_3split_check(const Graph& g, const SplitPartition& p);

}  // namespace edom

#endif
