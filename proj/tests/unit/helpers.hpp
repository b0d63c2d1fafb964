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

#ifndef EDOM_TEST_HELPERS_HPP
#define EDOM_TEST_HELPERS_HPP

#include <vector>

#include <edom/graph.hpp>

namespace edom::test {

inline Graph make(int n, std::vector<Edge> edges) { return Graph(n, edges); }

// triangle 0,1,2 with one pendant-ish vertex on each side
inline Graph sun3()
{
    return make(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {2, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}});
}

inline Graph k23()
{
    return make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

}  // namespace edom::test

#endif
