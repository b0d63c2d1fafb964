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

#include <doctest.h>

#include <edom/errors.hpp>
#include <edom/generators.hpp>
#include <edom/matching.hpp>
#include <edom/oracle.hpp>
#include <edom/split.hpp>
#include <edom/split_solvers.hpp>

#include "helpers.hpp"

using namespace edom;

namespace {

// clique 0..c-1, independent vertices c.., adjacency given per clique vertex
Graph split_of(int c, int i, std::vector<std::pair<int, int>> ci)
{
    Graph g(c + i);
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b) g.add_edge(a, b);
    for (auto [x, y] : ci) g.add_edge(x, c + y);
    return g;
}

}  // namespace

TEST_CASE("claw-free solver on small graphs")
{
    auto p3 = split_partition(path_graph(3));
    CHECK(solve_k13_free(path_graph(3), *p3) == 2);
    auto p4 = split_partition(path_graph(4));
    CHECK(solve_k13_free(path_graph(4), *p4) == 2);
    CHECK_THROWS_AS(solve_k13_free(complete_graph(4), *split_partition(complete_graph(4))), PreconditionError);
    CHECK_THROWS_AS(solve_k13_free(star_graph(3), *split_partition(star_graph(3))), PreconditionError);
}

TEST_CASE("claw-free solver on the 3-sun")
{
    // the count formula gives |I| = 3 but two guards suffice
    auto p = split_partition(test::sun3());
    CHECK(solve_k13_free(test::sun3(), *p) == 3);
    CHECK(medn_oracle(test::sun3()) == 2);
}

TEST_CASE("2-split fixtures")
{
    Graph a = split_of(3, 4, {{0, 0}, {0, 1}, {1, 2}, {1, 3}});
    auto ra = solve_k14_2split(a, *split_partition(a));
    CHECK(ra.value == 3);
    CHECK(ra.reduced.labels.size() == 2);
    CHECK(ra.reduced.iprime.empty());
    CHECK(medn_oracle(a) == 3);

    // y1 sees both clique vertices, so the maximal partition moves it into C
    // and the graph becomes claw-free; the labeled graph is still as drawn
    Graph b = split_of(2, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
    auto lb = build_labeled_graph(b, {0, 1}, {2, 3, 4});
    REQUIRE(lb.edges.size() == 2);
    CHECK(lb.edges[0] == LabeledEdge{2, 3, 0});
    CHECK(lb.edges[1] == LabeledEdge{3, 4, 1});
    CHECK(max_matching(lb).size() == 1);
    CHECK(split_partition(b)->clique == std::vector<Vertex>{0, 1, 3});
    CHECK(solve_split_auto(b).value == 3);
    CHECK(medn_oracle(b) == 3);

    // c0 sees everything, so this one is a star and goes to the dispatcher
    Graph c = split_of(2, 2, {{0, 0}, {0, 1}});
    CHECK(solve_split_auto(c).value == 2);
    CHECK(medn_oracle(c) == 2);
}

TEST_CASE("reduced graph of the 2-split pipeline is 1-split")
{
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_k14_split(rng, 10, 2);
        auto p = split_partition(g);
        REQUIRE(p);
        auto r = solve_k14_2split(g, *p);
        const Graph& h = r.reduced.reduced.graph;
        // back in original ids, each clique vertex keeps at most one I' neighbour
        std::vector<bool> in_ip(g.order());
        for (Vertex v : r.reduced.iprime) in_ip[v] = true;
        for (int v = 0; v < h.order(); ++v) {
            int orig = r.reduced.reduced.original[v];
            if (in_ip[orig]) continue;
            int cnt = 0;
            for (Vertex u : h.neighbors(v)) cnt += in_ip[r.reduced.reduced.original[u]];
            CHECK(cnt <= 1);
        }
    }
}

TEST_CASE("Q classification")
{
    BipartiteQ q;
    q.a = {0, 1, 2};
    q.b = {10, 11, 12};
    q.weight = {{10, 0}, {11, 1}, {12, 2}};

    SUBCASE("isolated A is Neither")
    {
        CHECK(classify_Q(q).type == QType::neither);
    }
    SUBCASE("perfect matching on distinct weights is Type I")
    {
        q.edges = {{0, 10}, {1, 11}, {2, 12}};
        CHECK(classify_Q(q).type == QType::type_i);
    }
    SUBCASE("shared neighbour plus a separate edge is Type II")
    {
        q.edges = {{0, 10}, {1, 10}, {2, 11}};
        auto c = classify_Q(q);
        CHECK(c.type == QType::type_ii);
        CHECK(c.witness.size() == 3);
    }
    SUBCASE("equal weights block Type I")
    {
        q.weight = {{10, 0}, {11, 0}, {12, 0}};
        q.edges = {{0, 10}, {1, 11}, {2, 12}};
        CHECK(classify_Q(q).type == QType::neither);
    }
}

TEST_CASE("3-split with a universal vertex")
{
    // x = 0 sees all three independent vertices and the rest of the clique
    Graph g = split_of(3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 1}});
    auto p = split_partition(g);
    REQUIRE(p);
    REQUIRE(p->delta_i == 3);
    auto r = solve_k14_3split(g, *p);
    CHECK(r.x == 0);
    CHECK(r.q_type.type == QType::neither);
    CHECK(r.value == 2);
    CHECK(medn_oracle(g) == 2);
}

TEST_CASE("3-split value does not depend on x")
{
    Rng rng(13);
    int multi = 0;
    for (int t = 0; t < 60; ++t) {
        Graph g = random_k14_3split_targeted(rng, 11);
        auto p = split_partition(g);
        REQUIRE(p);
        std::vector<Vertex> xs;
        for (Vertex v : p->clique)
            if (independent_degree(g, *p, v) == 3) xs.push_back(v);
        if (xs.size() < 2) continue;
        ++multi;
        int first = solve_k14_3split(g, *p, xs[0]).value;
        for (Vertex x : xs) CHECK(solve_k14_3split(g, *p, x).value == first);
    }
    CHECK(multi > 0);
}

TEST_CASE("dispatcher tags")
{
    CHECK(solve_split_auto(complete_graph(6)).method == "complete");
    CHECK(solve_split_auto(complete_graph(6)).value == 1);
    CHECK(solve_split_auto(path_graph(4)).method == "k13");
    CHECK(solve_split_auto(path_graph(4)).value == 2);
    CHECK(solve_split_auto(star_graph(5)).method == "star");
    CHECK_THROWS_AS(solve_split_auto(cycle_graph(4)), PreconditionError);
}
