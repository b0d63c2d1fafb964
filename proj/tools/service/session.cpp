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

#include <filesystem>
#include <fstream>

#include <edom/errors.hpp>
#include <edom/io.hpp>

namespace edom::service {

namespace fs = std::filesystem;

namespace {

json moves_json(const std::vector<Move>& moves)
{
    json a = json::array();
    for (const Move& m : moves) a.push_back({m.from, m.to});
    return a;
}

std::vector<Move> moves_from_json(const json& a)
{
    std::vector<Move> out;
    for (const auto& m : a) out.push_back({m.at(0).get<Vertex>(), m.at(1).get<Vertex>()});
    return out;
}

}  // namespace

SessionManager::SessionManager(std::optional<std::string> persist_dir, std::uint64_t oracle_budget)
    : dir_(std::move(persist_dir)), budget_(oracle_budget)
{
    if (dir_) fs::create_directories(*dir_);
}

std::shared_ptr<Session> SessionManager::create(const Graph& g, int k, const std::string& mode,
                                                std::optional<DefenseStrategy> strategy)
{
    if (!g.fits_mask()) throw InputError("graph has more than 64 vertices");
    if (g.order() == 0) throw InputError("graph has no vertices");
    std::optional<Defender> d;
    if (mode == "oracle") {
        OracleOptions opt;
        opt.budget = budget_;
        d.emplace(Defender::with_oracle(g, k, opt));
    } else if (mode == "strategy") {
        if (!strategy) strategy = auto_strategy(g);
        if (!strategy) throw InputError("no strategy is known for this graph; pass one or use oracle mode");
        if (!strategy_fits(g, *strategy)) throw InputError("strategy does not fit the graph");
        if (strategy->k != k)
            throw InputError("strategy defends with " + std::to_string(strategy->k) + " guards, not " +
                             std::to_string(k));
        d.emplace(Defender::with_strategy(g, std::move(*strategy)));
    } else {
        throw InputError("mode must be \"oracle\" or \"strategy\"");
    }

    auto s = std::shared_ptr<Session>(new Session{"", std::move(*d), {}});
    {
        std::lock_guard lk(mu_);
        s->id = "s" + std::to_string(next_++);
        sessions_[s->id] = s;
    }
    persist(*s);
    return s;
}

std::shared_ptr<Session> SessionManager::get(const std::string& id) const
{
    std::lock_guard lk(mu_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

bool SessionManager::remove(const std::string& id)
{
    std::lock_guard lk(mu_);
    if (!sessions_.erase(id)) return false;
    if (dir_) {
        std::error_code ec;
        fs::remove(fs::path(*dir_) / (id + ".json"), ec);
    }
    return true;
}

std::size_t SessionManager::size() const
{
    std::lock_guard lk(mu_);
    return sessions_.size();
}

json SessionManager::describe(const Session& s)
{
    const Defender& d = s.defender;
    json j;
    j["id"] = s.id;
    j["mode"] = d.mode() == DefenderMode::oracle ? "oracle" : "strategy";
    j["k"] = d.k();
    j["n"] = d.graph().order();
    j["graph"] = graph_json(d.graph());
    j["config"] = to_vertices(d.config());
    json hist = json::array();
    for (const auto& st : d.history())
        hist.push_back({{"vertex", st.attack}, {"moves", moves_json(st.moves)}, {"config", to_vertices(st.config)}});
    j["history"] = hist;
    if (d.mode() == DefenderMode::strategy) j["strategy"] = json::parse(strategy_to_json(d.strategy(), false));
    return j;
}

void SessionManager::persist(const Session& s) const
{
    if (!dir_) return;
    auto path = fs::path(*dir_) / (s.id + ".json");
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << describe(s).dump(2) << "\n";
    }
    fs::rename(tmp, path);
}

std::size_t SessionManager::restore()
{
    if (!dir_) return 0;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(*dir_))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    std::size_t loaded = 0;
    for (const auto& f : files) {
        json j = json::parse(read_text_file(f.string()));
        Graph g = graph_from_json(j.at("graph"));
        int k = j.at("k").get<int>();
        std::string mode = j.at("mode").get<std::string>();
        OracleOptions opt;
        opt.budget = budget_;
        std::optional<Defender> d;
        if (mode == "oracle")
            d.emplace(Defender::with_oracle(g, k, opt));
        else
            d.emplace(Defender::with_strategy(g, strategy_from_json(j.at("strategy").dump())));

        std::vector<DefenseStep> hist;
        for (const auto& h : j.at("history")) {
            DefenseStep st;
            st.attack = h.at("vertex").get<Vertex>();
            st.moves = moves_from_json(h.at("moves"));
            st.config = to_mask(h.at("config").get<std::vector<Vertex>>());
            hist.push_back(std::move(st));
        }
        d->resume(to_mask(j.at("config").get<std::vector<Vertex>>()), std::move(hist));

        std::string id = j.at("id").get<std::string>();
        auto s = std::shared_ptr<Session>(new Session{id, std::move(*d), {}});
        std::lock_guard lk(mu_);
        sessions_[id] = s;
        if (id.size() > 1 && id[0] == 's') next_ = std::max<std::uint64_t>(next_, std::stoull(id.substr(1)) + 1);
        ++loaded;
    }
    return loaded;
}

}  // namespace edom::service
