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
#include <edom/oracle.hpp>
#include <edom/reductions.hpp>
#include <edom/split.hpp>
#include <edom/split_solvers.hpp>
#include <edom/strategy.hpp>

#include "helpers.hpp"

using namespace edom;

namespace {

DefenseStrategy k13_of(const Graph& g) { return strategy_k13(g, *split_partition(g)); }

}  // namespace

TEST_CASE("claw-free strategies close")
{
    for (auto [g, k] : std::vector<std::pair<Graph, int>>{{path_graph(4), 2}, {path_graph(3), 2}, {test::sun3(), 3}}) {
        auto s = k13_of(g);
        CHECK(s.k == k);
        auto rep = verify_closure(g, s);
        CHECK_MESSAGE(rep.proven, rep.summary());
    }
}

TEST_CASE("2-split strategy on a fixture")
{
    Graph g(7);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) g.add_edge(a, b);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(1, 5);
    g.add_edge(1, 6);
    auto s = strategy_k14_2split(g, *split_partition(g));
    CHECK(s.k == 3);
    CHECK(verify_closure(g, s).proven);
    // an attack on a guarded vertex changes nothing
    Vertex guarded = lowest(s.initial);
    auto d = Defender::with_strategy(g, s);
    auto step = d.attack(guarded);
    CHECK(step.moves.empty());
    CHECK(step.config == s.initial);
}

TEST_CASE("random 2-split and 3-split strategies close")
{
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_k14_split(rng, 10, 2);
        auto s = strategy_k14_2split(g, *split_partition(g));
        CHECK(verify_closure(g, s).proven);
    }
    for (int t = 0; t < 20; ++t) {
        Graph g = random_k14_3split_targeted(rng, 10);
        auto p = *split_partition(g);
        auto s = strategy_k14_3split(g, p);
        CHECK(s.k == solve_k14_3split(g, p).value);
        CHECK(verify_closure(g, s).proven);
    }
}

TEST_CASE("X3C strategy")
{
    auto inst = fig2_instance();
    auto cg = reduce_x3c(inst);
    auto s = strategy_x3c(cg, {0, 1, 3});
    CHECK(s.k == 5);
    CHECK(verify_closure(cg.graph, s).proven);
    CHECK_THROWS(strategy_x3c(cg, {0, 2, 3}));

    X3CInstance one{1, {{0, 1, 2}}};
    auto c1 = reduce_x3c(one);
    auto s1 = strategy_x3c(c1, {0});
    CHECK(s1.k == 3);
    CHECK(verify_closure(c1.graph, s1).proven);
}

TEST_CASE("3DM strategy on the small matching instance")
{
    ThreeDMInstance inst{1, {{0, 0, 0}, {0, 0, 0}}};
    auto r = reduce_3dm(inst);
    auto m = perfect_matchings(inst);
    REQUIRE_FALSE(m.empty());
    auto s = strategy_3dm(r.constructed, m.front());
    CHECK(s.k == 7);
    CHECK(verify_closure(r.constructed.graph, s).proven);
    CHECK_THROWS(strategy_3dm(r.constructed, {0, 1}));
}

TEST_CASE("fault injection")
{
    auto cg = reduce_x3c(fig2_instance());
    auto s = strategy_x3c(cg, {0, 1, 3});

    SUBCASE("dropping a move is caught")
    {
        auto bad = s;
        for (auto& r : bad.rules)
            if (r.moves.size() >= 2) {
                r.moves.erase(r.moves.begin());
                break;
            }
        bad.reindex();
        auto rep = verify_closure(cg.graph, bad);
        CHECK_FALSE(rep.proven);
        CHECK(rep.attack >= 0);
    }
    SUBCASE("a non-dominating start is caught")
    {
        auto bad = s;
        bad.initial = bit(0) | bit(1) | bit(2) | bit(3) | bit(4);
        bad.reindex();
        auto rep = verify_closure(cg.graph, bad);
        CHECK_FALSE(rep.proven);
        CHECK(rep.config == bad.initial);
    }
}

TEST_CASE("strategy json round trip")
{
    auto g = test::sun3();
    auto s = k13_of(g);
    auto back = strategy_from_json(strategy_to_json(s));
    CHECK(back.k == s.k);
    CHECK(back.initial == s.initial);
    CHECK(back.families.size() == s.families.size());
    CHECK(back.rules.size() == s.rules.size());
    CHECK(strategy_to_json(back) == strategy_to_json(s));
    CHECK(verify_closure(g, back).proven);
    CHECK_THROWS_AS(strategy_from_json("{\"k\": 2}"), InputError);
    CHECK_FALSE(strategy_fits(path_graph(3), s));
}

TEST_CASE("oracle defender on K1,4 and P5")
{
    auto d = Defender::with_oracle(star_graph(4), 2);
    auto step = d.attack(3);
    CHECK(has(step.config, 3));
    CHECK(popcount(step.config) == 2);

    CHECK_THROWS_AS(Defender::with_oracle(path_graph(5), 2), PreconditionError);
    CHECK_THROWS_AS(d.attack(9), InputError);

    auto p = Defender::with_oracle(path_graph(5), 3);
    Rng rng(99);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int i = 0; i < 100; ++i) {
        GuardConfig before = p.config();
        auto st = p.attack(pick(rng));
        CHECK(has(st.config, st.attack));
        CHECK(is_dominating(path_graph(5), st.config));
        CHECK(guards_move_reachable(path_graph(5), before, st.config));
        CHECK(st.moves.size() <= 3);
    }
    CHECK(p.history().size() == 100);
}

TEST_CASE("defender resume")
{
    auto d = Defender::with_oracle(path_graph(5), 3);
    auto st = d.attack(4);
    auto e = Defender::with_oracle(path_graph(5), 3);
    e.resume(st.config, d.history());
    CHECK(e.config() == d.config());
    CHECK_THROWS_AS(e.resume(bit(0) | bit(1) | bit(2), {}), InputError);
}
