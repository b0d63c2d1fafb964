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

#ifndef EDOM_IO_HPP
#define EDOM_IO_HPP

#include <string>
#include <string_view>

#include "edom/graph.hpp"

namespace edom {

/**
 * Parse either the JSON graph format {"n":..,"edges":[[u,v],..],"labels":{..}}
 * or a whitespace edge list ("u v" per line, '#' comments, optional "n=<int>"
 * header). The format is chosen by the first non-blank character.
 * Throws InputError.
 */
Graph parse_graph(std::string_view text);
Graph parse_graph_json(std::string_view text);
Graph parse_edge_list(std::string_view text);

std::string to_json_text(const Graph& g);
std::string to_edge_list(const Graph& g);

Graph read_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace edom

#endif
