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

#ifndef EDOM_GENERATORS_HPP
#define EDOM_GENERATORS_HPP

#include <optional>
#include <random>
#include <vector>

#include "edom/graph.hpp"

namespace edom {

using Rng = std::mt19937_64;

/** G(n, p) random graph. */
Graph random_graph(Rng& rng, int n, double p);

/**
 * Split graph with clique 0..c-1 and independent vertices c..c+i-1. Each
 * clique vertex draws at most max_i_degree independent neighbours; every
 * independent vertex gets at least one clique neighbour.
 */
Graph random_split_graph(Rng& rng, int c, int i, int max_i_degree);

/**
 * Connected K_{1,4}-free split graph on at most n_max vertices whose maximal
 * split partition has delta_i == want_delta (2 or 3). Retries internally.
 */
Graph random_k14_split(Rng& rng, int n_max, int want_delta);

/**
 * K_{1,4}-free 3-split graph built around vertex 0 with independent
 * neighbours A; the other clique vertices each see part of A and some extra
 * independent vertices, which makes Type I and Type II instances common.
 */
Graph random_k14_3split_targeted(Rng& rng, int n_max);

/** Random connected claw-free split graph, neither complete nor a star. */
Graph random_claw_free_split(Rng& rng, int n_max);

/**
 * Every connected claw-free split graph with 3 <= n <= n_max that is neither
 * complete nor a star, up to isomorphism of the clique-type multiset.
 */
std::vector<Graph> claw_free_split_family(int n_max);

/** One representative per isomorphism class of graphs on 1..3 vertices. */
std::vector<Graph> small_graph_classes();

}  // namespace edom

#endif
