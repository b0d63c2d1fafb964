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

#include <sstream>
#include <thread>

#include <httplib.h>

#include <edom/errors.hpp>
#include <edom/io.hpp>

#include "service.hpp"

using namespace edom;
using namespace edom::service;

namespace {

const char* kStar = R"({"n":5,"edges":[[0,1],[0,2],[0,3],[0,4]]})";

int cli(std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr)
{
    std::vector<const char*> argv{"edom"};
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
    if (out) *out = o.str();
    if (err) *err = e.str();
    return code;
}

struct Server {
    SessionManager sessions;
    httplib::Server http;
    int port = 0;
    std::thread worker;

    Server()
    {
        install_routes(http, sessions, ServeOptions{});
        port = http.bind_to_any_port("127.0.0.1");
        worker = std::thread([this] { http.listen_after_bind(); });
        http.wait_until_ready();
    }
    ~Server()
    {
        http.stop();
        worker.join();
    }
};

}  // namespace

TEST_CASE("budget flag parsing")
{
    auto all = parse_budget("2e6");
    CHECK(all.at("medn") == 2000000);
    CHECK(all.at("edn") == 2000000);
    auto some = parse_budget("medn=100,edn=5e3");
    CHECK(some.at("medn") == 100);
    CHECK(some.at("edn") == 5000);
    CHECK(some.count("gamma") == 0);
    CHECK_THROWS_AS(parse_budget("foo=1"), InputError);
    CHECK_THROWS_AS(parse_budget("medn=abc"), InputError);
}

TEST_CASE("analysis report")
{
    AnalyzeOptions opt;
    opt.params = {"gamma", "alpha", "medn", "edn"};
    auto r = analyze(path_graph(5), opt);
    CHECK(*r.gamma == 2);
    CHECK(*r.alpha == 3);
    CHECK(*r.medn == 3);
    CHECK(*r.edn == 3);
    CHECK(r.sandwich);
    CHECK(r.methods.at("alpha") == "peo");

    opt.method = "k13";
    CHECK_THROWS_WITH_AS(analyze(cycle_graph(4), opt), "not a split graph", PreconditionError);

    AnalyzeOptions tight;
    tight.params = {"medn"};
    tight.method = "oracle";
    tight.budget["medn"] = 3;
    auto b = analyze(path_graph(8), tight);
    CHECK(b.budget_exceeded.at("medn"));
    CHECK_FALSE(b.medn.has_value());
    CHECK(to_json(b)["medn"].is_null());
}

TEST_CASE("analysis report json round trip")
{
    auto r = analyze(star_graph(4), AnalyzeOptions{});
    auto j = json::parse(to_json(r).dump());
    CHECK(j["medn"] == 2);
    CHECK(j["methods"]["medn"] == "star");
    CHECK(j["budgetExceeded"]["gamma"] == false);
}

TEST_CASE("presets")
{
    auto ps = presets();
    bool fig2 = false;
    for (const auto& p : ps) {
        if (p.name != "x3c-fig2") continue;
        fig2 = true;
        CHECK(p.k == 5);
        REQUIRE(p.strategy);
        CHECK(verify_closure(p.graph, *p.strategy).proven);
    }
    CHECK(fig2);
}

TEST_CASE("session manager")
{
    SessionManager m;
    auto s = m.create(star_graph(4), 2, "oracle", std::nullopt);
    CHECK(s->id == "s1");
    CHECK(m.get("s1") == s);
    CHECK_THROWS_AS(m.create(star_graph(4), 1, "oracle", std::nullopt), PreconditionError);
    CHECK_THROWS_AS(m.create(star_graph(4), 2, "bogus", std::nullopt), InputError);
    auto t = m.create(path_graph(4), 2, "strategy", std::nullopt);
    CHECK(t->defender.mode() == DefenderMode::strategy);
    CHECK(m.remove("s1"));
    CHECK_FALSE(m.remove("s1"));
    CHECK(m.size() == 1);
}

TEST_CASE("session snapshots survive a restart")
{
    auto dir = std::filesystem::temp_directory_path() / "edom_session_test";
    std::filesystem::remove_all(dir);
    {
        SessionManager m(dir.string());
        auto s = m.create(path_graph(5), 3, "oracle", std::nullopt);
        std::lock_guard lk(s->lock);
        s->defender.attack(0);
        s->defender.attack(4);
        m.persist(*s);
    }
    SessionManager again(dir.string());
    CHECK(again.restore() == 1);
    auto s = again.get("s1");
    REQUIRE(s);
    CHECK(s->defender.history().size() == 2);
    CHECK(has(s->defender.config(), 4));
    CHECK(again.create(path_graph(5), 3, "oracle", std::nullopt)->id == "s2");
    std::filesystem::remove_all(dir);
}

TEST_CASE("http session api")
{
    Server srv;
    httplib::Client c("127.0.0.1", srv.port);
    std::string star = kStar;

    auto created = c.Post("/api/session", R"({"graph":)" + star + R"(,"k":2})", "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    auto body = json::parse(created->body);
    std::string id = body["id"];
    CHECK(body["config"].size() == 2);

    auto refused = c.Post("/api/session", R"({"graph":)" + star + R"(,"k":1})", "application/json");
    REQUIRE(refused);
    CHECK(refused->status == 409);
    CHECK(json::parse(refused->body).contains("error"));

    auto bad = c.Post("/api/session", "{not json", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);

    auto hit = c.Post("/api/session/" + id + "/attack", R"({"vertex":3})", "application/json");
    REQUIRE(hit);
    CHECK(hit->status == 200);
    auto step = json::parse(hit->body);
    auto cfg = step["config"].get<std::vector<int>>();
    CHECK(std::find(cfg.begin(), cfg.end(), 3) != cfg.end());
    CHECK(step["moves"].size() <= 2);

    auto off = c.Post("/api/session/" + id + "/attack", R"({"vertex":17})", "application/json");
    REQUIRE(off);
    CHECK(off->status == 400);

    auto got = c.Get("/api/session/" + id);
    REQUIRE(got);
    CHECK(got->status == 200);
    CHECK(json::parse(got->body)["history"].size() == 1);

    auto del = c.Delete("/api/session/" + id);
    REQUIRE(del);
    CHECK(del->status == 200);
    auto gone = c.Get("/api/session/" + id);
    REQUIRE(gone);
    CHECK(gone->status == 404);
}

TEST_CASE("http presets, strategy sessions and analysis")
{
    Server srv;
    httplib::Client c("127.0.0.1", srv.port);

    auto list = c.Get("/api/presets");
    REQUIRE(list);
    CHECK(list->status == 200);
    CHECK(json::parse(list->body).size() >= 4);

    auto fig = c.Post("/api/session", R"({"graphRef":"x3c-fig2","k":5,"mode":"strategy"})", "application/json");
    REQUIRE(fig);
    CHECK(fig->status == 201);
    std::string id = json::parse(fig->body)["id"];
    for (int v = 0; v < 17; ++v) {
        auto r = c.Post("/api/session/" + id + "/attack", json{{"vertex", v}}.dump(), "application/json");
        REQUIRE(r);
        CHECK(r->status == 200);
    }

    auto an = c.Post("/api/analyze", json{{"graph", json::parse(kStar)}, {"params", {"medn", "gamma"}}}.dump(),
                     "application/json");
    REQUIRE(an);
    CHECK(an->status == 200);
    auto rep = json::parse(an->body);
    CHECK(rep["medn"] == 2);
    CHECK(rep["gamma"] == 1);
}

TEST_CASE("p5 session holds for 100 attacks")
{
    Server srv;
    httplib::Client c("127.0.0.1", srv.port);
    auto created = c.Post("/api/session", R"({"graphRef":"path-5","k":3})", "application/json");
    REQUIRE(created);
    REQUIRE(created->status == 201);
    std::string id = json::parse(created->body)["id"];
    Graph p5 = path_graph(5);
    auto prev = json::parse(created->body)["config"].get<std::vector<int>>();
    for (int i = 0; i < 100; ++i) {
        int v = (i * 7 + 3) % 5;
        auto r = c.Post("/api/session/" + id + "/attack", json{{"vertex", v}}.dump(), "application/json");
        REQUIRE(r);
        REQUIRE(r->status == 200);
        auto cfg = json::parse(r->body)["config"].get<std::vector<int>>();
        CHECK(has(to_mask(cfg), v));
        CHECK(is_dominating(p5, to_mask(cfg)));
        CHECK(guards_move_reachable(p5, to_mask(prev), to_mask(cfg)));
        prev = cfg;
    }
}

TEST_CASE("command line")
{
    std::string out, err;
    CHECK(cli({"selftest"}, &out) == 0);
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(cli({"nonsense"}) == 2);
    CHECK(cli({"analyze", "/nonexistent.json"}, nullptr, &err) == 2);
    CHECK(err.find("error") != std::string::npos);
}
