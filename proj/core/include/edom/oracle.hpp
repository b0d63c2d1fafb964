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

#ifndef EDOM_ORACLE_HPP
#define EDOM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edom/graph.hpp"

namespace edom {

/** Set of occupied vertices; k is its popcount. */
using GuardConfig = Mask;

struct Move {
    Vertex from;
    Vertex to;
    friend bool operator==(const Move&, const Move&) = default;
};

bool is_dominating(const Graph& g, std::span<const Vertex> s);
bool is_dominating(const Graph& g, GuardConfig s);

/**
 * A guards move from d to d2 as a list of single-guard steps, or nullopt if
 * none exists. Idle guards are omitted, swaps are cancelled, and the list is
 * ordered so that every step lands on a vertex that is free at that point.
 * Throws PreconditionError when the sizes differ.
 */
std::optional<std::vector<Move>> guards_move(const Graph& g, GuardConfig d, GuardConfig d2);
bool guards_move_reachable(const Graph& g, GuardConfig d, GuardConfig d2);

enum class GuardModel { all_guards, one_guard };

struct OracleOptions {
    std::uint64_t budget = 50'000'000;  // search nodes per call
    GuardModel model = GuardModel::all_guards;
};

/** Configurations certified safe for k guards, ascending by encoding. */
struct WinningSet {
    int k = 0;
    std::vector<GuardConfig> configs;

    bool empty() const { return configs.empty(); }
    bool contains(GuardConfig c) const;
};

enum class Feasibility { feasible, infeasible, unknown };

struct FeasibilityResult {
    Feasibility outcome = Feasibility::unknown;
    WinningSet winning;
    std::uint64_t work = 0;
    std::size_t dominating_sets = 0;
};

/**
 * Greatest fixed point over dominating k-sets. Returns unknown (never
 * infeasible) when the budget runs out. Requires order() <= 64 and 1 <= k <= n.
 */
FeasibilityResult medn_feasible(const Graph& g, int k, const OracleOptions& opt = {});

/** Sum over components of the least feasible k. Throws BudgetExceeded. */
int medn_oracle(const Graph& g, const OracleOptions& opt = {});

struct EdnResult {
    int value = 0;
    std::optional<int> alpha;  // set for chordal inputs, equal to value
};

/** One-guard model value; cross-checked against alpha on chordal graphs. */
EdnResult edn_oracle(const Graph& g, const OracleOptions& opt = {});

/** Minimum dominating set by branch and bound. */
std::vector<Vertex> min_dominating_set(const Graph& g);
int gamma_exact(const Graph& g);

/** Independence number by exhaustive search (n <= 64). */
int alpha_exact(const Graph& g);

/**
 * Least-encoded member of w containing r that is reachable from current
 * under the given model.
 */
std::optional<GuardConfig> safe_successor(const Graph& g, const WinningSet& w, GuardConfig current, Vertex r,
                                          GuardModel model = GuardModel::all_guards);

}  // namespace edom

#endif
