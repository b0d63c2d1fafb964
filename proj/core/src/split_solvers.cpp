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

#include "edom/split_solvers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "edom/errors.hpp"
#include "edom/oracle.hpp"

namespace edom {

namespace {

std::vector<Vertex> neighbors_in(const Graph& g, Vertex v, const std::vector<char>& member)
{
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
        if (member[w]) out.push_back(w);
    return out;
}

std::vector<char> membership(const Graph& g, const std::vector<Vertex>& vs)
{
    std::vector<char> m(g.order(), 0);
    for (Vertex v : vs) m[v] = 1;
    return m;
}

void require_common(const Graph& g, const SplitPartition& p)
{
    if (!is_connected(g)) throw PreconditionError("graph is not connected");
    if (!is_valid_split_partition(g, p)) throw PreconditionError("partition is not a valid split partition");
    if (is_complete(g)) throw PreconditionError("graph is complete");
    if (is_star(g)) throw PreconditionError("graph is a star");
}

// Labels, matching and reduced graph for the independent set `indep` against clique.
ReducedInstance reduce(const Graph& g, const std::vector<Vertex>& clique, const std::vector<Vertex>& indep,
                       LabeledGraph& labeled, std::vector<LabeledEdge>& matching)
{
    labeled = build_labeled_graph(g, clique, indep);
    matching = max_matching(labeled);
    ReducedInstance r;
    r.clique = clique;
    for (const auto& e : matching) r.labels.push_back(e.label);
    std::sort(r.labels.begin(), r.labels.end());
    if (std::adjacent_find(r.labels.begin(), r.labels.end()) != r.labels.end())
        throw InconsistencyError("two matching edges share a label");
    auto in_indep = membership(g, indep);
    std::set<Vertex> removed;
    for (Vertex l : r.labels)
        for (Vertex w : neighbors_in(g, l, in_indep)) removed.insert(w);
    r.removed.assign(removed.begin(), removed.end());
    for (Vertex v : indep)
        if (!removed.count(v)) r.iprime.push_back(v);
    std::vector<Vertex> keep = clique;
    keep.insert(keep.end(), r.iprime.begin(), r.iprime.end());
    std::sort(keep.begin(), keep.end());
    r.reduced = induced_subgraph(g, keep);
    auto in_iprime = membership(g, r.iprime);
    for (Vertex c : clique)
        if (neighbors_in(g, c, in_iprime).size() > 1)
            throw InconsistencyError("reduced graph is not 1-split at clique vertex " + std::to_string(c));
    return r;
}

}  // namespace

int solve_k13_free(const Graph& g, const SplitPartition& p)
{
    // P3 is the one claw-free star; the count below is right for it
    if (g.order() == 3 && is_star(g) && is_valid_split_partition(g, p)) return 2;
    require_common(g, p);
    if (!claw_free_split_check(g, p)) throw PreconditionError("graph is not claw-free");
    std::set<Vertex> covered;
    for (Vertex v : p.independent)
        for (Vertex w : g.neighbors(v)) covered.insert(w);
    int n_i = static_cast<int>(p.independent.size());
    return covered.size() == p.clique.size() ? n_i : n_i + 1;
}

TwoSplitResult solve_k14_2split(const Graph& h, const SplitPartition& p)
{
    require_common(h, p);
    if (p.delta_i != 2) throw PreconditionError("graph is not 2-split (delta_i = " + std::to_string(p.delta_i) + ")");
    if (!is_k1t_free(h, 4)) throw PreconditionError("graph is not K_{1,4}-free");
    TwoSplitResult res;
    res.reduced = reduce(h, p.clique, p.independent, res.labeled, res.matching);
    res.value = static_cast<int>(res.reduced.labels.size() + res.reduced.iprime.size()) + 1;
    return res;
}

std::string to_string(QType t)
{
    switch (t) {
    case QType::type_i: return "TypeI";
    case QType::type_ii: return "TypeII";
    case QType::neither: return "Neither";
    }
    return "?";
}

namespace {

struct XPipeline {
    BipartiteQ q;
    LabeledGraph labeled;
    std::vector<LabeledEdge> matching;
    ReducedInstance reduced;
};

XPipeline run_x_pipeline(const Graph& g, const SplitPartition& p, Vertex x)
{
    if (!std::binary_search(p.clique.begin(), p.clique.end(), x))
        throw PreconditionError("x is not a clique vertex");
    auto a = independent_neighbors(g, p, x);
    if (a.size() != 3) throw PreconditionError("x does not have exactly three independent neighbours");
    std::vector<Vertex> hat_i;
    for (Vertex v : p.independent)
        if (!std::binary_search(a.begin(), a.end(), v)) hat_i.push_back(v);
    auto in_hat = membership(g, hat_i);
    for (Vertex c : p.clique)
        if (neighbors_in(g, c, in_hat).size() > 2)
            throw InconsistencyError("graph after removing N^I(x) is not 2-split");
    XPipeline out;
    out.reduced = reduce(g, p.clique, hat_i, out.labeled, out.matching);
    if (out.matching.size() > 2) throw InconsistencyError("labeled graph has a matching larger than 2");

    BipartiteQ& q = out.q;
    q.a = a;
    auto in_iprime = membership(g, out.reduced.iprime);
    std::set<Vertex> b(out.reduced.labels.begin(), out.reduced.labels.end());
    for (Vertex c : p.clique)
        if (!neighbors_in(g, c, in_iprime).empty()) b.insert(c);
    q.b.assign(b.begin(), b.end());
    for (Vertex c : q.b) {
        auto nb = neighbors_in(g, c, in_iprime);
        q.weight[c] = nb.empty() ? g.order() + c : nb.front();
    }
    for (Vertex u : q.a)
        for (Vertex c : q.b)
            if (g.adjacent(u, c)) q.edges.emplace_back(u, c);
    return out;
}

}  // namespace

BipartiteQ build_Q(const Graph& g, const SplitPartition& p, Vertex x) { return run_x_pipeline(g, p, x).q; }

QClassification classify_Q(const BipartiteQ& q, TypeIIReading reading)
{
    if (q.a.size() != 3) throw PreconditionError("Q needs exactly three A-vertices");
    std::set<std::pair<Vertex, Vertex>> edge(q.edges.begin(), q.edges.end());
    auto adj = [&](Vertex a, Vertex b) { return edge.count({a, b}) > 0; };
    QClassification out;
    for (Vertex b0 : q.b)
        for (Vertex b1 : q.b)
            for (Vertex b2 : q.b) {
                if (b0 == b1 || b0 == b2 || b1 == b2) continue;
                if (!adj(q.a[0], b0) || !adj(q.a[1], b1) || !adj(q.a[2], b2)) continue;
                int w0 = q.weight.at(b0), w1 = q.weight.at(b1), w2 = q.weight.at(b2);
                if (w0 == w1 || w0 == w2 || w1 == w2) continue;
                out.type = QType::type_i;
                out.witness = {{q.a[0], b0}, {q.a[1], b1}, {q.a[2], b2}};
                return out;
            }
    // d is the A-vertex not in the K_{1,2}
    for (int d = 0; d < 3; ++d) {
        Vertex va = q.a[(d + 1) % 3], vb = q.a[(d + 2) % 3], vd = q.a[d];
        if (va > vb) std::swap(va, vb);
        for (Vertex c : q.b)
            for (Vertex e : q.b) {
                if (c == e || !adj(va, c) || !adj(vb, c) || !adj(vd, e)) continue;
                if (q.weight.at(c) == q.weight.at(e)) continue;
                if (reading == TypeIIReading::induced && (adj(vd, c) || adj(va, e) || adj(vb, e))) continue;
                out.type = QType::type_ii;
                out.witness = {{va, c}, {vb, c}, {vd, e}};
                return out;
            }
    }
    return out;
}

ThreeSplitResult solve_k14_3split(const Graph& g, const SplitPartition& p, Vertex x, TypeIIReading reading)
{
    require_common(g, p);
    if (p.delta_i != 3) throw PreconditionError("graph is not 3-split (delta_i = " + std::to_string(p.delta_i) + ")");
    if (!k14_free_3split_check(g, p)) throw PreconditionError("graph is not K_{1,4}-free");
    auto pipe = run_x_pipeline(g, p, x);
    ThreeSplitResult res;
    res.x = x;
    res.q = pipe.q;
    res.labeled = pipe.labeled;
    res.matching = pipe.matching;
    res.reduced = pipe.reduced;
    res.q_type = classify_Q(res.q, reading);
    int base = static_cast<int>(res.reduced.labels.size() + res.reduced.iprime.size());
    res.value = base + (res.q_type.type == QType::neither ? 2 : 1);
    std::ostringstream ex;
    ex << "x=" << x << " |L|=" << res.reduced.labels.size() << " |I'|=" << res.reduced.iprime.size()
       << " Q=" << to_string(res.q_type.type) << " value=" << res.value;
    res.explanation = ex.str();
    return res;
}

ThreeSplitResult solve_k14_3split(const Graph& g, const SplitPartition& p)
{
    for (Vertex c : p.clique)
        if (independent_degree(g, p, c) == 3) return solve_k14_3split(g, p, c);
    throw PreconditionError("no clique vertex with three independent neighbours");
}

AutoResult solve_split_auto(const Graph& g)
{
    auto p = split_partition(g);
    if (!p) throw PreconditionError("not a split graph");
    if (!is_connected(g)) throw PreconditionError("graph is not connected");
    if (is_complete(g)) return {1, "complete"};
    if (is_star(g)) return {2, "star"};
    if (claw_free_split_check(g, *p)) return {solve_k13_free(g, *p), "k13"};
    if (is_k1t_free(g, 4)) {
        if (p->delta_i == 2) return {solve_k14_2split(g, *p).value, "k14-2"};
        if (p->delta_i == 3) return {solve_k14_3split(g, *p).value, "k14-3"};
    }
    return {medn_oracle(g), "oracle-fallback"};
}

}  // namespace edom
