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

#include <string>
#include <vector>

#include <edom/errors.hpp>
#include <edom/generators.hpp>
#include <edom/oracle.hpp>

#include "helpers.hpp"

using namespace edom;

namespace {

struct Known {
    std::string name;
    Graph g;
    int gamma, alpha, medn, edn;
};

// values from a separate brute-force implementation
std::vector<Known> known()
{
    return {
        {"P3", path_graph(3), 1, 2, 2, 2},
        {"P4", path_graph(4), 2, 2, 2, 2},
        {"P5", path_graph(5), 2, 3, 3, 3},
        {"P6", path_graph(6), 2, 3, 3, 3},
        {"P7", path_graph(7), 3, 4, 4, 4},
        {"C4", cycle_graph(4), 2, 2, 2, 2},
        {"C5", cycle_graph(5), 2, 2, 2, 3},
        {"C6", cycle_graph(6), 2, 3, 2, 3},
        {"K1,4", star_graph(4), 1, 4, 2, 4},
        {"K4", complete_graph(4), 1, 1, 1, 1},
        {"K2,3", test::k23(), 2, 3, 2, 3},
        {"3-sun", test::sun3(), 2, 3, 2, 3},
        {"2K2", disjoint_union(complete_graph(2), complete_graph(2)), 2, 2, 2, 2},
        {"P5+C4", disjoint_union(path_graph(5), cycle_graph(4)), 4, 5, 5, 5},
    };
}

}  // namespace

TEST_CASE("parameters of small graphs")
{
    for (const auto& k : known()) {
        CAPTURE(k.name);
        CHECK(gamma_exact(k.g) == k.gamma);
        CHECK(alpha_exact(k.g) == k.alpha);
        CHECK(medn_oracle(k.g) == k.medn);
        CHECK(edn_oracle(k.g).value == k.edn);
    }
}

TEST_CASE("feasibility thresholds")
{
    CHECK(medn_feasible(complete_graph(5), 1).outcome == Feasibility::feasible);
    CHECK(medn_feasible(star_graph(4), 1).outcome == Feasibility::infeasible);
    CHECK(medn_feasible(star_graph(4), 2).outcome == Feasibility::feasible);
    CHECK(medn_feasible(path_graph(5), 2).outcome == Feasibility::infeasible);
    CHECK(medn_feasible(path_graph(5), 3).outcome == Feasibility::feasible);
}

TEST_CASE("a tiny budget gives unknown, never infeasible")
{
    OracleOptions opt;
    opt.budget = 5;
    auto r = medn_feasible(path_graph(9), 4, opt);
    CHECK(r.outcome == Feasibility::unknown);
    CHECK_THROWS_AS(medn_oracle(path_graph(9), opt), BudgetExceeded);
}

TEST_CASE("guards move between configurations")
{
    Graph p = path_graph(5);
    // {0,2} -> {1,3}: both guards step right
    auto m = guards_move(p, to_mask(std::vector<Vertex>{0, 2}), to_mask(std::vector<Vertex>{1, 3}));
    REQUIRE(m);
    CHECK(m->size() == 2);
    // the guard on 2 must leave before the one on 1 arrives, or vice versa; either way each step lands on a free vertex
    Mask cur = to_mask(std::vector<Vertex>{0, 2});
    for (const Move& mv : *m) {
        CHECK(has(cur, mv.from));
        CHECK_FALSE(has(cur, mv.to));
        CHECK(p.adjacent(mv.from, mv.to));
        cur = (cur & ~bit(mv.from)) | bit(mv.to);
    }
    CHECK(cur == to_mask(std::vector<Vertex>{1, 3}));
    CHECK_FALSE(guards_move(p, to_mask(std::vector<Vertex>{0, 1}), to_mask(std::vector<Vertex>{3, 4})));
    CHECK_THROWS_AS(guards_move(p, 0b1, 0b11), PreconditionError);
}

TEST_CASE("winning sets are dominating and closed")
{
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, 4 + t % 4, 0.45);
        if (!is_connected(g)) continue;
        int k = medn_oracle(g);
        auto r = medn_feasible(g, k);
        REQUIRE(r.outcome == Feasibility::feasible);
        for (GuardConfig c : r.winning.configs) {
            CHECK(is_dominating(g, c));
            for (Vertex v = 0; v < g.order(); ++v) {
                auto next = safe_successor(g, r.winning, c, v);
                REQUIRE(next);
                CHECK(has(*next, v));
                CHECK(guards_move_reachable(g, c, *next));
            }
        }
        CHECK(medn_feasible(g, k + (k < g.order() ? 1 : 0)).outcome == Feasibility::feasible);
    }
}

TEST_CASE("GP3 and GP2 of K3")
{
    // K3 with a P3 hanging off each vertex by its middle
    Graph g = complete_graph(3);
    Graph gp3 = disjoint_union(g, empty_graph(9));
    for (int i = 0; i < 3; ++i) {
        int a = 3 + 3 * i;
        gp3.add_edge(a, a + 1);
        gp3.add_edge(a + 1, a + 2);
        gp3.add_edge(i, a + 1);
    }
    CHECK(gamma_exact(gp3) == 3);
    CHECK(medn_oracle(gp3) == 6);
}

TEST_CASE("universal vertex gives two guards")
{
    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(rng, 3 + t % 6, 0.5);
        if (!is_connected(g) || is_complete(g) || universal_vertices(g).empty()) continue;
        CHECK(medn_oracle(g) == 2);
    }
    // the converse fails: C4 needs two guards and has no universal vertex
    CHECK(medn_oracle(cycle_graph(4)) == 2);
    CHECK(universal_vertices(cycle_graph(4)).empty());
}
