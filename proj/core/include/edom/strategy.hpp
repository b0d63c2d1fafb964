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

#ifndef EDOM_STRATEGY_HPP
#define EDOM_STRATEGY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "edom/graph.hpp"
#include "edom/oracle.hpp"
#include "edom/reductions.hpp"
#include "edom/split.hpp"

namespace edom {

/** A concrete guard configuration reached by a strategy. */
struct Family {
    std::string id;           // e.g. "D2#3"
    std::string kind;         // the table column, e.g. "D2"
    std::string description;  // role bindings
    GuardConfig config = 0;
};

/** Response of family `family` to an attack on `attack`, as ordered steps. */
struct Rule {
    std::string family;
    Vertex attack = -1;
    std::string attack_class;
    std::vector<Move> moves;
    bool supplementary = false;
};

/**
 * Configurations are classified by exact lookup in `families`; an attack
 * on an occupied vertex with no rule is answered by standing still.
 */
struct DefenseStrategy {
    std::string name;
    int k = 0;
    GuardConfig initial = 0;
    std::vector<Vertex> invariant;
    std::vector<Family> families;
    std::vector<Rule> rules;
    std::vector<std::string> notes;

    const Family* classify(GuardConfig c) const;
    const Rule* rule(const std::string& family, Vertex r) const;
    /** Rebuilds the lookup tables; call after editing families or rules. */
    void reindex();

private:
    std::unordered_map<GuardConfig, std::size_t> family_index_;
    std::map<std::pair<std::string, Vertex>, std::size_t> rule_index_;
};

struct ClosureReport {
    std::size_t visited_configs = 0;
    bool proven = false;
    // counterexample when not proven
    GuardConfig config = 0;
    Vertex attack = -1;
    std::string reason;

    std::string summary() const;
};

/**
 * Breadth-first walk over every configuration reachable from the initial
 * one. Proven iff each response is a legal guards move that covers the
 * attack, dominates, keeps the invariant and lands on a known family.
 */
ClosureReport verify_closure(const Graph& g, const DefenseStrategy& s);

/** True if every vertex id in s is a vertex of g and k fits. */
bool strategy_fits(const Graph& g, const DefenseStrategy& s);

std::string strategy_to_json(const DefenseStrategy& s, bool pretty = true);
/** Throws InputError on malformed text. */
DefenseStrategy strategy_from_json(const std::string& text);

// Table engine

struct RoleMove {
    std::string from;
    std::string to;
};

/** A cell lists alternatives in order; an empty alternative is "-". */
struct TableCell {
    std::vector<std::vector<RoleMove>> alternatives;
    bool supplementary = false;
};

class RuleTable {
public:
    /** Cell text: "a->b, c->d : e->f : -". */
    void add(const std::string& family, const std::string& attack_class, const std::string& text,
             bool supplementary = false);
    /** Base cells first, then supplementary ones. */
    std::vector<const TableCell*> cells(const std::string& family, const std::string& attack_class) const;

private:
    std::map<std::pair<std::string, std::string>, std::vector<TableCell>> cells_;
};

struct Binding {
    std::string kind;  // family kind or attack class
    std::map<std::string, Vertex> roles;
};

struct StrategySpec {
    std::string name;
    int k = 0;
    GuardConfig initial = 0;
    Mask invariant = 0;
    RuleTable table;
    std::function<std::optional<Binding>(GuardConfig)> classify;
    // attack on an unoccupied vertex, given the family binding
    std::function<std::optional<Binding>(GuardConfig, const Binding&, Vertex)> attack;
};

/**
 * Explores the configurations reachable under the table. For each attack the
 * first alternative that binds, moves legally and lands on a classified
 * dominating configuration is taken. Unanswered attacks are left without a
 * rule and noted.
 */
DefenseStrategy compile_strategy(const Graph& g, const StrategySpec& spec);

// Strategies

/** One guard per clique of a clique partition built around I. */
DefenseStrategy strategy_k13(const Graph& g, const SplitPartition& p);
DefenseStrategy strategy_k14_2split(const Graph& h, const SplitPartition& p);
DefenseStrategy strategy_k14_3split(const Graph& g, const SplitPartition& p);
DefenseStrategy strategy_x3c(const ConstructedGraph& cg, const std::vector<int>& cover);
DefenseStrategy strategy_3dm(const ConstructedGraph& cg, const std::vector<int>& matching);

// Interactive defence

enum class DefenderMode { oracle, strategy };

struct DefenseStep {
    Vertex attack = -1;
    std::vector<Move> moves;
    GuardConfig config = 0;
};

class Defender {
public:
    /** Throws PreconditionError if k guards cannot win, BudgetExceeded if unknown. */
    static Defender with_oracle(const Graph& g, int k, const OracleOptions& opt = {});
    /** Throws PreconditionError unless the strategy is proven on g. */
    static Defender with_strategy(const Graph& g, DefenseStrategy s);

    /** Throws InputError for a vertex outside the graph. */
    DefenseStep attack(Vertex r);

    /**
     * Continues from a saved position. Throws InputError unless c is a
     * configuration this defender could have reached.
     */
    void resume(GuardConfig c, std::vector<DefenseStep> history);

    const Graph& graph() const { return g_; }
    int k() const { return k_; }
    DefenderMode mode() const { return mode_; }
    GuardConfig config() const { return config_; }
    const std::vector<DefenseStep>& history() const { return history_; }
    /** Empty in oracle mode. */
    const DefenseStrategy& strategy() const { return strategy_; }

private:
    Defender(Graph g, int k, DefenderMode mode) : g_(std::move(g)), k_(k), mode_(mode) {}

    Graph g_;
    int k_ = 0;
    DefenderMode mode_;
    GuardConfig config_ = 0;
    WinningSet winning_;
    DefenseStrategy strategy_;
    std::vector<DefenseStep> history_;
};

}  // namespace edom

#endif
