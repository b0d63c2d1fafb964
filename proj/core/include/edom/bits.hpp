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

#ifndef EDOM_BITS_HPP
#define EDOM_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace edom {

using Vertex = int;

// Vertex sets for graphs with at most 64 vertices.
using Mask = std::uint64_t;

constexpr int kMaxMaskVertices = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline bool has(Mask m, Vertex v) { return (m >> v) & 1U; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline Vertex lowest(Mask m) { return std::countr_zero(m); }

template <typename F>
inline void for_each_bit(Mask m, F&& f)
{
    while (m) {
        f(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
}

inline std::vector<Vertex> to_vertices(Mask m)
{
    std::vector<Vertex> out;
    for_each_bit(m, [&](Vertex v) { out.push_back(v); });
    return out;
}

template <typename Range>
inline Mask to_mask(const Range& vs)
{
    Mask m = 0;
    for (Vertex v : vs) m |= bit(v);
    return m;
}

}  // namespace edom

#endif
