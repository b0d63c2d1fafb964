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

#ifndef EDOM_SERVICE_HPP
#define EDOM_SERVICE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include <edom/graph.hpp>
#include <edom/reductions.hpp>
#include <edom/strategy.hpp>

namespace httplib {
class Server;
}

namespace edom::service {

using nlohmann::json;

// Exit codes shared by every command.
enum Exit : int { ok = 0, negative = 1, usage = 2, budget = 3 };

/** "medn=1e6,edn=2e6" or a bare number for every parameter. */
std::map<std::string, std::uint64_t> parse_budget(const std::string& text);

struct AnalyzeOptions {
    std::set<std::string> params{"gamma", "alpha", "medn"};
    std::string method = "auto";  // auto, k13, k14-2, k14-3, oracle
    std::map<std::string, std::uint64_t> budget;
};

struct AnalysisReport {
    std::optional<int> gamma, alpha, medn, edn;
    std::map<std::string, std::string> methods;
    std::map<std::string, double> timings_ms;
    std::map<std::string, bool> budget_exceeded;
    bool sandwich = true;  // gamma <= medn <= alpha <= edn over the reported values

    bool any_budget_exceeded() const;
};

/** Throws PreconditionError when a forced method does not apply. */
AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opt);
json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

json graph_json(const Graph& g);
Graph graph_from_json(const json& j);
json constructed_json(const ConstructedGraph& cg);
json tree_json(const CliqueTree& t);
X3CInstance x3c_from_json(const json& j);
ThreeDMInstance threedm_from_json(const json& j);

struct Preset {
    std::string name;
    std::string description;
    Graph graph;
    int k = 0;
    std::optional<DefenseStrategy> strategy;
};
std::vector<Preset> presets();

/** Strategy for a split graph in the solved classes, or nullopt. */
std::optional<DefenseStrategy> auto_strategy(const Graph& g);

// Sessions

struct Session {
    std::string id;
    Defender defender;
    std::mutex lock;  // one attack at a time
};

class SessionManager {
public:
    explicit SessionManager(std::optional<std::string> persist_dir = std::nullopt,
                            std::uint64_t oracle_budget = 50'000'000);

    /** Throws PreconditionError (infeasible), BudgetExceeded, InputError. */
    std::shared_ptr<Session> create(const Graph& g, int k, const std::string& mode,
                                    std::optional<DefenseStrategy> strategy);
    std::shared_ptr<Session> get(const std::string& id) const;
    bool remove(const std::string& id);
    std::size_t size() const;

    /** Snapshot of one session; the caller holds the session lock. */
    static json describe(const Session& s);
    void persist(const Session& s) const;
    /** Reloads snapshots from the persist directory; returns how many. */
    std::size_t restore();

private:
    mutable std::mutex mu_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::optional<std::string> dir_;
    std::uint64_t budget_;
    std::uint64_t next_ = 1;
};

struct ServeOptions {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::optional<std::string> persist_dir;
    std::optional<std::string> static_dir;
    std::uint64_t oracle_budget = 50'000'000;
};

/** Installs the /api routes on an existing server. */
void install_routes(httplib::Server& server, SessionManager& sessions, const ServeOptions& opt);

/** Blocks until the server stops. Returns a process exit code. */
int serve(const ServeOptions& opt, std::ostream& log);

/** The edom command line. */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edom::service

#endif
