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
#include <edom/graph.hpp>
#include <edom/io.hpp>

#include "helpers.hpp"

using namespace edom;

TEST_CASE("graph construction collapses parallel edges and rejects loops")
{
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.size() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS(g.add_edge(2, 2));
    CHECK_THROWS(g.add_edge(0, 3));
}

TEST_CASE("closed and open masks")
{
    Graph p = path_graph(4);
    CHECK(p.closed_mask(1) == 0b0111);
    CHECK(p.open_mask(1) == 0b0101);
    CHECK(p.max_degree() == 2);
    CHECK(p.min_degree() == 1);
}

TEST_CASE("components are ordered by their least vertex")
{
    Graph g = disjoint_union(path_graph(3), complete_graph(2));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(comps[1] == std::vector<Vertex>{3, 4});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(cycle_graph(5)));
}

TEST_CASE("induced subgraph keeps list order")
{
    Graph c = cycle_graph(5);
    std::vector<Vertex> vs{3, 1, 2};
    auto sub = induced_subgraph(c, vs);
    CHECK(sub.graph.order() == 3);
    CHECK(sub.original == vs);
    CHECK(sub.graph.adjacent(0, 2));  // 3 ~ 2
    CHECK(sub.graph.adjacent(1, 2));  // 1 ~ 2
    CHECK_FALSE(sub.graph.adjacent(0, 1));
}

TEST_CASE("shape predicates")
{
    CHECK(is_complete(complete_graph(4)));
    CHECK(is_star(star_graph(4)));
    CHECK(is_star(complete_graph(2)));
    CHECK_FALSE(is_star(path_graph(4)));
    CHECK(universal_vertices(star_graph(3)) == std::vector<Vertex>{0});
    CHECK(universal_vertices(cycle_graph(4)).empty());
}

TEST_CASE("json and edge list parsing")
{
    Graph g = parse_graph(R"({"n": 4, "edges": [[0,1],[1,2]], "labels": {"2": "x"}})");
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);
    CHECK(g.name(2) == "x");

    Graph h = parse_graph("# comment\nn=5\n0 1\n3 4\n");
    CHECK(h.order() == 5);
    CHECK(h.adjacent(3, 4));

    Graph back = parse_graph(to_json_text(g));
    CHECK(back == g);
    CHECK(parse_graph(to_edge_list(h)) == h);
}

TEST_CASE("malformed graph text is an input error")
{
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,5]]})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,1)"), InputError);
    CHECK_THROWS_AS(parse_graph("0 x\n"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"edges": []})"), InputError);
}
