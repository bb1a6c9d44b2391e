#include "cdt/contraction.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace cdt {

ContractionMap contract(const Graph& g, const std::vector<int>& x) {
    std::vector<char> in_x(g.n, 0);
    for (int v : x) {
        if (v < 0 || v >= g.n) throw validation_error("contract: vertex out of range");
        in_x[v] = 1;
    }

    ContractionMap cm;
    cm.rep.assign(g.n, -1);

    // Components of G[X] first (in order of smallest member), then the plain
    // vertices in id order.
    int next = 0;
    for (int s = 0; s < g.n; ++s) {
        if (!in_x[s] || cm.rep[s] >= 0) continue;
        const int sv = next++;
        cm.members.emplace_back();
        cm.is_contracted.push_back(1);
        std::queue<int> q;
        q.push(s);
        cm.rep[s] = sv;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            cm.members[sv].push_back(v);
            for (int u : g.adj[v])
                if (in_x[u] && cm.rep[u] < 0) {
                    cm.rep[u] = sv;
                    q.push(u);
                }
        }
        std::sort(cm.members[sv].begin(), cm.members[sv].end());
    }
    for (int v = 0; v < g.n; ++v) {
        if (in_x[v]) continue;
        cm.rep[v] = next++;
        cm.members.push_back({v});
        cm.is_contracted.push_back(0);
    }

    cm.internal_edges.assign(next, {});
    std::map<std::pair<int, int>, std::vector<int>> qedges;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        int a = cm.rep[u], b = cm.rep[v];
        if (a == b) {
            cm.internal_edges[a].push_back(e);
            continue;
        }
        if (a > b) std::swap(a, b);
        qedges[{a, b}].push_back(e);
    }

    std::vector<std::pair<int, int>> elist;
    elist.reserve(qedges.size());
    cm.edge_provenance.reserve(qedges.size());
    for (auto& [uv, prov] : qedges) {
        elist.push_back(uv);
        cm.edge_provenance.push_back(std::move(prov));
    }
    cm.quotient = Graph::make(next, std::move(elist));
    return cm;
}

ComponentOrbit component_orbit(const Graph& g, const std::vector<int>& component,
                               const ProblemSpec& prob) {
    ComponentOrbit orbit;
    orbit.contracted = true;
    const bool group_problem = is_group_problem(prob.kind);
    orbit.orbit_count = group_problem ? prob.group.size : 2;

    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < component.size(); ++i) pos[component[i]] = static_cast<int>(i);
    orbit.base.assign(component.size(), -1);

    // BFS propagation from the smallest member; any conflicting edge means the
    // component is non-bipartite (oct/eb) or carries a non-null cycle.
    orbit.base[0] = 0;
    std::queue<int> q;
    q.push(component[0]);
    while (!q.empty() && orbit.feasible) {
        int v = q.front();
        q.pop();
        for (int u : g.adj[v]) {
            if (pos[u] < 0) continue;
            int want;
            if (group_problem) {
                const int e = g.edge_index(v, u);
                const int lab = prob.label_from(e, v, g.edges[e].first, g.edges[e].second);
                want = prob.group.multiply(orbit.base[pos[v]], lab);
            } else {
                want = orbit.base[pos[v]] ^ 1;
            }
            if (orbit.base[pos[u]] < 0) {
                orbit.base[pos[u]] = want;
                q.push(u);
            } else if (orbit.base[pos[u]] != want) {
                orbit.feasible = false;
                break;
            }
        }
    }
    if (!orbit.feasible) return orbit;
    for (int b : orbit.base)
        if (b < 0) throw validation_error("component_orbit: component is not connected");
    return orbit;
}

std::vector<ComponentOrbit> all_orbits(const Graph& g, const ContractionMap& cm,
                                       const ProblemSpec& prob) {
    std::vector<ComponentOrbit> orbits(cm.quotient.n);
    for (int sv = 0; sv < cm.quotient.n; ++sv) {
        if (cm.is_contracted[sv]) {
            orbits[sv] = component_orbit(g, cm.members[sv], prob);
        } else {
            orbits[sv].contracted = false;
            orbits[sv].orbit_count = 1;
        }
    }
    return orbits;
}

} // namespace cdt
