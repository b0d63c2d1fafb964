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

#include "edom/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "edom/errors.hpp"

namespace edom {

using nlohmann::json;

namespace {

int as_vertex_id(const json& j)
{
    if (!j.is_number_integer()) throw InputError("vertex id must be an integer");
    auto v = j.get<long long>();
    if (v < 0 || v > 1'000'000) throw InputError("vertex id out of range: " + std::to_string(v));
    return static_cast<int>(v);
}

}  // namespace

Graph parse_graph_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("graph JSON must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("graph JSON needs integer field n");
    const long long n = j["n"].get<long long>();
    if (n <= 0) throw InputError("graph must have at least one vertex");
    if (n > 1'000'000) throw InputError("vertex count too large");
    Graph g(static_cast<int>(n));
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("edges must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair [u,v]");
            int u = as_vertex_id(e[0]);
            int v = as_vertex_id(e[1]);
            if (u >= n || v >= n) {
                throw InputError("vertex id out of range in edge [" + std::to_string(u) + "," +
                                 std::to_string(v) + "]");
            }
            g.add_edge(u, v);
        }
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_object()) throw InputError("labels must be an object");
        for (const auto& [key, value] : j["labels"].items()) {
            int v;
            try {
                std::size_t pos = 0;
                v = std::stoi(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw InputError("label key is not a vertex id: " + key);
            }
            if (v < 0 || v >= n) throw InputError("label for unknown vertex " + key);
            if (!value.is_string()) throw InputError("label values must be strings");
            g.set_label(v, value.get<std::string>());
        }
    }
    return g;
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<Edge> edges;
    long long declared = -1;
    int max_id = -1;
    bool first_content = true;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (first_content && a.rfind("n=", 0) == 0) {
            first_content = false;
            try {
                std::size_t pos = 0;
                declared = std::stoll(a.substr(2), &pos);
                if (pos != a.size() - 2) throw std::invalid_argument(a);
            } catch (const std::exception&) {
                throw InputError("bad header on line " + std::to_string(lineno));
            }
            if (declared <= 0) throw InputError("graph must have at least one vertex");
            continue;
        }
        first_content = false;
        if (!(ls >> b) || (ls >> extra)) throw InputError("expected 'u v' on line " + std::to_string(lineno));
        long long u, v;
        try {
            std::size_t pa = 0, pb = 0;
            u = std::stoll(a, &pa);
            v = std::stoll(b, &pb);
            if (pa != a.size() || pb != b.size()) throw std::invalid_argument(a);
        } catch (const std::exception&) {
            throw InputError("non-integer vertex id on line " + std::to_string(lineno));
        }
        if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
            throw InputError("vertex id out of range on line " + std::to_string(lineno));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max<int>(max_id, static_cast<int>(std::max(u, v)));
    }
    long long n = declared >= 0 ? declared : max_id + 1;
    if (n <= 0) throw InputError("graph must have at least one vertex");
    if (max_id >= n) throw InputError("vertex id out of range: " + std::to_string(max_id));
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text)
{
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_graph_json(text) : parse_edge_list(text);
    }
    throw InputError("empty graph text");
}

std::string to_json_text(const Graph& g)
{
    json j;
    j["n"] = g.order();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [v, name] : g.labels()) labels[std::to_string(v)] = name;
        j["labels"] = labels;
    }
    return j.dump();
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n=" << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace edom
