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

#include <edom/generators.hpp>
#include <edom/split.hpp>

#include "helpers.hpp"

using namespace edom;

TEST_CASE("split recognition")
{
    CHECK(split_partition(path_graph(4)).has_value());
    CHECK_FALSE(split_partition(cycle_graph(4)).has_value());
    CHECK_FALSE(split_partition(cycle_graph(5)).has_value());
    CHECK_FALSE(split_partition(disjoint_union(complete_graph(2), complete_graph(2))).has_value());
    CHECK(split_partition(star_graph(5)).has_value());
}

TEST_CASE("the clique part is maximal")
{
    // P4: 1-2 must be the clique, not a single vertex
    auto p = split_partition(path_graph(4));
    REQUIRE(p);
    CHECK(p->clique == std::vector<Vertex>{1, 2});
    CHECK(p->independent == std::vector<Vertex>{0, 3});
    CHECK(p->delta_i == 1);

    // K_n has every vertex in C
    auto k = split_partition(complete_graph(4));
    REQUIRE(k);
    CHECK(k->clique.size() == 4);
    CHECK(k->independent.empty());
}

TEST_CASE("3-sun partition")
{
    auto p = split_partition(test::sun3());
    REQUIRE(p);
    CHECK(p->clique == std::vector<Vertex>{0, 1, 2});
    CHECK(p->delta_i == 2);
    CHECK(independent_neighbors(test::sun3(), *p, 1) == std::vector<Vertex>{4, 5});
    CHECK(claw_free_split_check(test::sun3(), *p));
}

TEST_CASE("recognized partitions are valid and among all partitions")
{
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_split_graph(rng, 2 + t % 4, 1 + t % 5, 3);
        auto p = split_partition(g);
        REQUIRE(p);
        CHECK(is_valid_split_partition(g, *p));
        bool found = false;
        for (const auto& q : all_split_partitions(g)) found = found || q.clique == p->clique;
        CHECK(found);
    }
}

TEST_CASE("split claw test agrees with the generic K1,t test")
{
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        Graph g = random_split_graph(rng, 2 + t % 5, 1 + t % 4, 2);
        if (!is_connected(g)) continue;
        auto p = split_partition(g);
        REQUIRE(p);
        if (p->delta_i > 2) continue;
        CHECK(claw_free_split_check(g, *p) == is_k1t_free(g, 3));
    }
}

TEST_CASE("3-split K1,4 test agrees with the generic test")
{
    Rng rng(9);
    int seen = 0;
    for (int t = 0; t < 400; ++t) {
        Graph g = random_split_graph(rng, 3 + t % 3, 3 + t % 4, 3);
        auto p = split_partition(g);
        REQUIRE(p);
        if (p->delta_i != 3) continue;
        ++seen;
        CHECK(k14_free_3split_check(g, *p) == is_k1t_free(g, 4));
    }
    CHECK(seen > 50);
}

TEST_CASE("star freeness")
{
    CHECK_FALSE(is_k1t_free(star_graph(3), 3));
    CHECK(is_k1t_free(star_graph(3), 4));
    CHECK(is_k1t_free(cycle_graph(6), 3));
}
