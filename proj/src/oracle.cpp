#include "cdt/oracle.hpp"

#include <algorithm>
#include <queue>

namespace cdt {

namespace {

// Consistent-labeling / 2-coloring check on the graph minus the deleted
// vertices (dead_v) and edges (dead_e). A propagation conflict is exactly a
// non-null (for oct/eb: odd) cycle in the remaining graph.
bool remaining_graph_violates(const ProblemSpec& prob, const Graph& g,
                              const std::vector<char>& dead_v, const std::vector<char>& dead_e) {
    const bool group_problem = is_group_problem(prob.kind);
    std::vector<int> label(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (dead_v[s] || label[s] >= 0) continue;
        label[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.adj[v]) {
                if (dead_v[u]) continue;
                const int e = g.edge_index(v, u);
                if (dead_e[e]) continue;
                int want;
                if (group_problem) {
                    const int lab = prob.label_from(e, v, g.edges[e].first, g.edges[e].second);
                    want = prob.group.multiply(label[v], lab);
                } else {
                    want = label[v] ^ 1;
                }
                if (label[u] < 0) {
                    label[u] = want;
                    q.push(u);
                } else if (label[u] != want) {
                    return true;
                }
            }
        }
    }
    return false;
}

OracleResult search(const ProblemSpec& prob, const Graph& g, const std::vector<int>& universe,
                    bool edge_kind) {
    std::vector<char> dead_v(g.n, 0), dead_e(g.m(), 0);
    auto violates = [&](const std::vector<int>& subset) {
        std::fill(dead_v.begin(), dead_v.end(), 0);
        std::fill(dead_e.begin(), dead_e.end(), 0);
        for (int x : subset)
            (edge_kind ? dead_e[x] : dead_v[x]) = 1;
        return remaining_graph_violates(prob, g, dead_v, dead_e);
    };

    // Deleting more never reintroduces a violation, so the full universe
    // failing means no restricted solution exists at all.
    if (violates(universe)) return {};

    const int u = static_cast<int>(universe.size());
    std::vector<int> pick, subset;
    for (int size = 0; size <= u; ++size) {
        pick.assign(size, 0);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            subset.clear();
            for (int i : pick) subset.push_back(universe[i]);
            if (!violates(subset)) {
                OracleResult r;
                r.feasible = true;
                r.optimum = size;
                r.witness = subset;
                std::sort(r.witness.begin(), r.witness.end());
                return r;
            }
            // next lexicographic combination
            int i = size - 1;
            while (i >= 0 && pick[i] == u - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {};
}

} // namespace

bool has_violation(const ProblemSpec& prob, const Graph& g, const std::vector<int>& deleted) {
    std::vector<char> dead_v(g.n, 0), dead_e(g.m(), 0);
    const bool edge_kind = !is_vertex_problem(prob.kind);
    for (int x : deleted) {
        if (x < 0 || x >= (edge_kind ? g.m() : g.n))
            throw validation_error("deletion set element out of range");
        (edge_kind ? dead_e[x] : dead_v[x]) = 1;
    }
    return remaining_graph_violates(prob, g, dead_v, dead_e);
}

OracleResult brute_force(const ProblemSpec& prob, const Graph& g, int max_n, int max_m) {
    return brute_force_restricted(prob, g, {}, max_n, max_m);
}

OracleResult brute_force_restricted(const ProblemSpec& prob, const Graph& g,
                                    const std::vector<int>& x, int max_n, int max_m) {
    const bool edge_kind = !is_vertex_problem(prob.kind);
    if (!edge_kind && g.n > max_n)
        throw instance_too_large("brute force capped at " + std::to_string(max_n) + " vertices");
    if (edge_kind && g.m() > max_m)
        throw instance_too_large("brute force capped at " + std::to_string(max_m) + " edges");

    std::vector<char> forbidden_v(g.n, 0);
    for (int v : x) forbidden_v[v] = 1;

    std::vector<int> universe;
    if (edge_kind) {
        for (int e = 0; e < g.m(); ++e)
            if (!forbidden_v[g.edges[e].first] && !forbidden_v[g.edges[e].second])
                universe.push_back(e);
    } else {
        for (int v = 0; v < g.n; ++v)
            if (!forbidden_v[v]) universe.push_back(v);
    }
    return search(prob, g, universe, edge_kind);
}

} // namespace cdt
