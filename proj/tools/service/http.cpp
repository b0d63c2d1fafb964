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

#include "service.hpp"

#include <ostream>
#include <semaphore>
#include <thread>

#include <httplib.h>

#include <edom/errors.hpp>

namespace edom::service {

namespace {

void reply(httplib::Response& res, int status, const json& body)
{
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void fail(httplib::Response& res, int status, const std::string& message)
{
    reply(res, status, json{{"error", message}});
}

json parse_body(const httplib::Request& req)
{
    try {
        json j = json::parse(req.body);
        if (!j.is_object()) throw InputError("request body must be a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

struct Resolved {
    Graph graph;
    std::optional<int> k;
    std::optional<DefenseStrategy> strategy;
};

Resolved resolve_graph(const json& body)
{
    if (body.contains("graph")) return {graph_from_json(body.at("graph")), std::nullopt, std::nullopt};
    if (body.contains("graphRef")) {
        auto name = body.at("graphRef").get<std::string>();
        for (auto& p : presets())
            if (p.name == name) return {p.graph, p.k, p.strategy};
        throw InputError("unknown preset '" + name + "'");
    }
    throw InputError("body needs \"graph\" or \"graphRef\"");
}

// Maps library errors to HTTP statuses.
template <class F>
void guarded(httplib::Response& res, F&& f)
{
    try {
        f();
    } catch (const InputError& e) {
        fail(res, 400, e.what());
    } catch (const json::exception& e) {
        fail(res, 400, e.what());
    } catch (const PreconditionError& e) {
        fail(res, 409, e.what());
    } catch (const BudgetExceeded& e) {
        fail(res, 503, e.what());
    } catch (const std::exception& e) {
        fail(res, 500, e.what());
    }
}

}  // namespace

void install_routes(httplib::Server& server, SessionManager& sessions, const ServeOptions& opt)
{
    // analyses share a small pool of slots on top of the server's own thread pool
    static std::counting_semaphore<64> slots(std::max(1u, std::min(64u, std::thread::hardware_concurrency())));
    const std::uint64_t budget = opt.oracle_budget;

    server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
        reply(res, 200, json{{"ok", true}});
    });

    server.Get("/api/presets", [](const httplib::Request&, httplib::Response& res) {
        guarded(res, [&] {
            json out = json::array();
            for (const auto& p : presets())
                out.push_back({{"name", p.name},
                               {"description", p.description},
                               {"k", p.k},
                               {"graph", graph_json(p.graph)},
                               {"hasStrategy", p.strategy.has_value()}});
            reply(res, 200, out);
        });
    });

    server.Post("/api/session", [&sessions](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            json body = parse_body(req);
            auto r = resolve_graph(body);
            int k = body.contains("k") ? body.at("k").get<int>() : r.k.value_or(0);
            if (k < 1) throw InputError("k must be a positive integer");
            std::string mode = body.value("mode", std::string("oracle"));
            std::optional<DefenseStrategy> s = r.strategy;
            if (body.contains("strategy")) s = strategy_from_json(body.at("strategy").dump());
            if (mode == "oracle") s.reset();
            auto session = sessions.create(r.graph, k, mode, std::move(s));
            std::lock_guard lk(session->lock);
            json out = SessionManager::describe(*session);
            out.erase("history");
            reply(res, 201, out);
        });
    });

    server.Get("/api/session/:id", [&sessions](const httplib::Request& req, httplib::Response& res) {
        auto s = sessions.get(req.path_params.at("id"));
        if (!s) return fail(res, 404, "no such session");
        std::lock_guard lk(s->lock);
        reply(res, 200, SessionManager::describe(*s));
    });

    server.Delete("/api/session/:id", [&sessions](const httplib::Request& req, httplib::Response& res) {
        const auto& id = req.path_params.at("id");
        if (!sessions.remove(id)) return fail(res, 404, "no such session");
        reply(res, 200, json{{"deleted", id}});
    });

    server.Post("/api/session/:id/attack", [&sessions](const httplib::Request& req, httplib::Response& res) {
        auto s = sessions.get(req.path_params.at("id"));
        if (!s) return fail(res, 404, "no such session");
        guarded(res, [&] {
            json body = parse_body(req);
            if (!body.contains("vertex") || !body.at("vertex").is_number_integer())
                throw InputError("body needs an integer \"vertex\"");
            std::lock_guard lk(s->lock);
            auto before = s->defender.config();
            auto step = s->defender.attack(body.at("vertex").get<Vertex>());
            const Graph& g = s->defender.graph();
            // the defender checks itself; this is the server's own check
            if (!has(step.config, step.attack) || !is_dominating(g, step.config) ||
                !guards_move_reachable(g, before, step.config))
                throw InconsistencyError("response failed the server check");
            json moves = json::array();
            for (const Move& m : step.moves) moves.push_back({m.from, m.to});
            sessions.persist(*s);
            reply(res, 200, json{{"vertex", step.attack}, {"moves", moves}, {"config", to_vertices(step.config)}});
        });
    });

    server.Post("/api/analyze", [budget](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            json body = parse_body(req);
            auto r = resolve_graph(body);
            AnalyzeOptions opt;
            if (body.contains("params")) opt.params = body.at("params").get<std::set<std::string>>();
            opt.method = body.value("method", std::string("auto"));
            for (const char* p : {"gamma", "alpha", "medn", "edn"}) opt.budget[p] = budget;
            slots.acquire();
            try {
                auto report = analyze(r.graph, opt);
                slots.release();
                reply(res, 200, to_json(report));
            } catch (...) {
                slots.release();
                throw;
            }
        });
    });

    if (opt.static_dir && !server.set_mount_point("/", *opt.static_dir))
        throw InputError("static directory not found: " + *opt.static_dir);
}

int serve(const ServeOptions& opt, std::ostream& log)
{
    SessionManager sessions(opt.persist_dir, opt.oracle_budget);
    if (opt.persist_dir) log << "restored " << sessions.restore() << " sessions\n";
    httplib::Server server;
    install_routes(server, sessions, opt);
    if (!server.bind_to_port(opt.host, opt.port)) {
        log << "error: cannot bind " << opt.host << ":" << opt.port << "\n";
        return Exit::usage;
    }
    log << "listening on http://" << opt.host << ":" << opt.port << "\n" << std::flush;
    server.listen_after_bind();
    return Exit::ok;
}

}  // namespace edom::service
