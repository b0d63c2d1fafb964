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

#ifndef EDOM_REDUCTIONS_HPP
#define EDOM_REDUCTIONS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edom/chordal.hpp"
#include "edom/graph.hpp"
#include "edom/oracle.hpp"

namespace edom {

/**
 * A built graph together with a role tag per vertex and the closed-form
 * values the construction predicts.
 */
struct ConstructedGraph {
    Graph graph;
    std::vector<std::string> roles;        // roles[v]
    std::map<std::string, int> predictions;

    /** Vertex carrying the role; throws PreconditionError if absent. */
    Vertex vertex(const std::string& role) const;
    std::optional<Vertex> find(const std::string& role) const;
};

// Base vertices keep their ids. The new vertices of base vertex i follow in
// blocks, i ascending; roles are "v<i>" and "v<i>^<j>".

/** v^0 - v^1 - v^2 with v ~ v^1. Predicts gamma = n, medn = 2n. */
ConstructedGraph build_gp3(const Graph& g);
/** v^0 - ... - v^4 with v ~ v^2. Predicts medn = 3n. */
ConstructedGraph build_gp5(const Graph& g);
/** Pendant path v - v^1 - v^2. Predicts gamma = n. */
ConstructedGraph build_gp2(const Graph& g);

struct Gp5DominationReport {
    int n = 0;
    int gamma_base = 0;
    int gamma_constructed = 0;
    bool holds = false;  // gamma_constructed == gamma_base + 2n
};
Gp5DominationReport gp5_domination_correspondence(const Graph& g);

struct Gp2ConjectureReport {
    int n = 0;
    int medn_base = 0;
    int medn_constructed = 0;
    bool consistent = false;  // medn_constructed == medn_base + n
};
Gp2ConjectureReport test_gp2_conjecture(const Graph& g, const OracleOptions& opt = {});

struct Gp3EternalReport {
    int n = 0;
    int k = 0;
    int edn_base = 0;
    int edn_constructed = 0;
    bool base_side = false;         // edn_base <= k
    bool constructed_side = false;  // edn_constructed <= k + 2n
    bool holds = false;
};
Gp3EternalReport test_gp3_eternal_correspondence(const Graph& g, int k, const OracleOptions& opt = {});

struct X3CInstance {
    int q = 0;
    std::vector<std::array<int, 3>> triples;  // elements 0 .. 3q-1
};

struct ThreeDMInstance {
    int q = 0;
    std::vector<std::array<int, 3>> triples;  // (w, x, y), each in 0 .. q-1
};

/** Throws InputError on a malformed instance. */
void validate(const X3CInstance& inst);
void validate(const ThreeDMInstance& inst);

/** All exact covers, each as ascending triple indices. */
std::vector<std::vector<int>> exact_covers(const X3CInstance& inst);
bool is_exact_cover(const X3CInstance& inst, const std::vector<int>& cover);

/** All perfect matchings, each as ascending triple indices. */
std::vector<std::vector<int>> perfect_matchings(const ThreeDMInstance& inst);
bool is_perfect_matching(const ThreeDMInstance& inst, const std::vector<int>& matching);

/**
 * Vertex order: c0..c{m-1}, u, x0..x{3q-1}, v, w. Clique {c_i} + u,
 * independent {x_j, v, w}. Predicts k = q + 2.
 */
ConstructedGraph reduce_x3c(const X3CInstance& inst);

/**
 * Internal edges of the nine-vertex gadget a..i beyond the triangle abc.
 * The forced part is read off the moves of the defence tables; the
 * candidates differ in the chords that make the gadget chordal.
 */
struct GadgetCandidate {
    std::string name;
    std::vector<std::pair<char, char>> edges;
};
std::vector<GadgetCandidate> gadget_candidates();
const GadgetCandidate& default_gadget();

struct ThreeDMReduction {
    ConstructedGraph constructed;
    CliqueTree tree;
    std::vector<std::string> warnings;  // elements in fewer than two triples
};

/**
 * Vertex order: gadget t occupies 9t .. 9t+8 as a..i, then W0.., X0..,
 * Y0.., then u, v, w. Roles are "a<t>".."i<t>", "W<j>", "X<j>", "Y<j>",
 * "u", "v", "w". The tree is built explicitly for the default gadget and
 * searched for otherwise. Throws InconsistencyError when the tree fails
 * the path property. Predicts k = 2p + q + 2.
 */
ThreeDMReduction reduce_3dm(const ThreeDMInstance& inst);
ThreeDMReduction reduce_3dm(const ThreeDMInstance& inst, const GadgetCandidate& gadget);

/** Figure instances. */
X3CInstance fig2_instance();
ThreeDMInstance fig3_instance();

struct GadgetGateReport {
    std::string name;
    bool path_property = false;
    bool closure = false;        // strategy proven on every matching instance tried
    bool oracle = false;         // k = 7 feasible, k = 6 infeasible on the p=2, q=1 instance
    bool accepted() const { return path_property && closure && oracle; }
    std::string detail;
};

/** Runs the three gates on one candidate. The oracle gate is the slow one. */
GadgetGateReport evaluate_gadget(const GadgetCandidate& gadget, bool run_oracle, const OracleOptions& opt = {});

}  // namespace edom

#endif
