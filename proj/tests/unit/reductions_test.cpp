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

#include <edom/chordal.hpp>
#include <edom/errors.hpp>
#include <edom/oracle.hpp>
#include <edom/reductions.hpp>
#include <edom/split.hpp>

using namespace edom;

TEST_CASE("GP constructions on K3")
{
    auto g3 = build_gp3(complete_graph(3));
    CHECK(g3.graph.order() == 12);
    CHECK(g3.predictions.at("gamma") == 3);
    CHECK(g3.predictions.at("medn") == 6);
    CHECK(g3.roles[0] == "v0");
    CHECK(g3.roles[3] == "v0^0");
    CHECK(g3.graph.adjacent(g3.vertex("v0"), g3.vertex("v0^1")));

    auto g5 = build_gp5(complete_graph(3));
    CHECK(g5.graph.order() == 18);
    CHECK(g5.graph.adjacent(g5.vertex("v1"), g5.vertex("v1^2")));
    CHECK(gamma_exact(g5.graph) == 7);

    auto g2 = build_gp2(complete_graph(3));
    CHECK(g2.graph.order() == 9);
    CHECK(gamma_exact(g2.graph) == 3);
    CHECK_FALSE(g2.find("v9").has_value());
    CHECK_THROWS_AS(g2.vertex("nope"), PreconditionError);
}

TEST_CASE("GP5 domination and GP2 value on K3")
{
    auto d = gp5_domination_correspondence(complete_graph(3));
    CHECK(d.gamma_base == 1);
    CHECK(d.gamma_constructed == 7);
    CHECK(d.holds);

    auto c = test_gp2_conjecture(complete_graph(3));
    CHECK(c.medn_base == 1);
    CHECK(c.medn_constructed == 4);
    CHECK(c.consistent);
}

TEST_CASE("GP3 eternal correspondence on P3")
{
    for (int k = 1; k <= 3; ++k) {
        auto r = test_gp3_eternal_correspondence(path_graph(3), k);
        CAPTURE(k);
        CHECK(r.edn_base == 2);
        CHECK(r.holds);
    }
}

TEST_CASE("instance validation")
{
    CHECK_THROWS_AS(validate(X3CInstance{1, {{0, 1, 5}}}), InputError);
    CHECK_THROWS_AS(validate(X3CInstance{1, {{0, 0, 1}}}), InputError);
    CHECK_THROWS_AS(validate(ThreeDMInstance{1, {{0, 0, 2}}}), InputError);
    CHECK_NOTHROW(validate(fig2_instance()));
    CHECK_NOTHROW(validate(fig3_instance()));
}

TEST_CASE("exact covers and matchings")
{
    auto covers = exact_covers(fig2_instance());
    REQUIRE(covers.size() == 1);
    CHECK(covers[0] == std::vector<int>{0, 1, 3});
    CHECK(is_exact_cover(fig2_instance(), {0, 1, 3}));
    CHECK_FALSE(is_exact_cover(fig2_instance(), {0, 2, 3}));

    ThreeDMInstance none{2, {{0, 0, 0}, {0, 1, 1}}};
    CHECK(perfect_matchings(none).empty());
    CHECK_FALSE(perfect_matchings(fig3_instance()).empty());
}

TEST_CASE("X3C graph shape")
{
    auto cg = reduce_x3c(fig2_instance());
    CHECK(cg.graph.order() == 17);
    CHECK(cg.predictions.at("k") == 5);
    auto p = split_partition(cg.graph);
    REQUIRE(p);
    CHECK(p->delta_i == 3);
    CHECK(is_k1t_free(cg.graph, 5));
    CHECK_FALSE(is_k1t_free(cg.graph, 4));
    CHECK(cg.roles[cg.vertex("u")] == "u");
}

TEST_CASE("X3C single triple needs three guards")
{
    X3CInstance one{1, {{0, 1, 2}}};
    auto cg = reduce_x3c(one);
    CHECK(cg.predictions.at("k") == 3);
    CHECK(medn_oracle(cg.graph) == 3);
}

TEST_CASE("3DM graph is chordal with a path clique tree")
{
    auto r = reduce_3dm(fig3_instance());
    CHECK(r.constructed.graph.order() == 36);
    CHECK(r.constructed.predictions.at("k") == 10);
    CHECK(is_chordal(r.constructed.graph));
    auto check = validate_clique_tree(r.constructed.graph, r.tree);
    CHECK(check.ok);
    CHECK(check.path_property);
    for (const auto& g : gadget_candidates()) {
        CAPTURE(g.name);
        auto rg = reduce_3dm(fig3_instance(), g);
        CHECK(rg.tree.path_property);
    }
}

TEST_CASE("3DM elements in a single triple are warned about")
{
    ThreeDMInstance inst{1, {{0, 0, 0}}};
    auto r = reduce_3dm(inst);
    CHECK_FALSE(r.warnings.empty());
}
