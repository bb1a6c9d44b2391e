#include "cdt/layering.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cdt {

Layering compute_layers(const VFIGraph& vfi, int outer_face) {
    if (!vfi.is_connected()) throw validation_error("VFI graph is not connected");

    std::vector<int> dist(vfi.node_count(), -1);
    std::queue<int> q;
    const int src = vfi.face_node(outer_face);
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : vfi.adj[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }

    Layering lay;
    lay.level_of.assign(vfi.num_vertices, 0);
    for (int v = 0; v < vfi.num_vertices; ++v) {
        // Vertex-face distances from a face to a vertex are odd.
        lay.level_of[v] = (dist[v] + 1) / 2;
        lay.m = std::max(lay.m, lay.level_of[v]);
    }
    lay.layers.assign(lay.m, {});
    for (int v = 0; v < vfi.num_vertices; ++v) lay.layers[lay.level_of[v] - 1].push_back(v);
    return lay;
}

ZFamily build_zsets(const Layering& lay, int p) {
    if (p < 1) throw validation_error("p must be >= 1");
    ZFamily zf;
    zf.p = p;
    zf.zsets.assign(p, {});
    zf.zindex_of.assign(lay.level_of.size(), 0);
    for (int j = 1; j <= lay.m; ++j) {
        int i = j % p;
        if (i == 0) i = p;
        for (int v : lay.layers[j - 1]) {
            zf.zsets[i - 1].push_back(v);
            zf.zindex_of[v] = i;
        }
    }
    for (auto& z : zf.zsets) std::sort(z.begin(), z.end());
    return zf;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

LayerReport check_layer_invariants(const EmbeddedGraph& eg, const FaceSet& fs,
                                   const Layering& lay) {
    const Graph& g = eg.graph;
    LayerReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.failures.push_back(std::move(msg));
    };

    for (auto [u, v] : g.edges) {
        if (std::abs(lay.level_of[u] - lay.level_of[v]) > 1)
            fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                 ") spans layers " + std::to_string(lay.level_of[u]) + " and " +
                 std::to_string(lay.level_of[v]));
    }

    for (int f = 0; f < fs.face_count(); ++f) {
        const auto& b = fs.boundary_vertices[f];
        if (b.empty()) continue;
        auto [lo, hi] = std::minmax_element(b.begin(), b.end(), [&](int a, int c) {
            return lay.level_of[a] < lay.level_of[c];
        });
        if (lay.level_of[*hi] - lay.level_of[*lo] > 1)
            fail("face " + std::to_string(f) + " touches layers " +
                 std::to_string(lay.level_of[*lo]) + " and " + std::to_string(lay.level_of[*hi]));
    }

    // Peel layers one at a time. Deleting a vertex removes its edges, and each
    // removed edge merges the two faces on its sides; the face classes of the
    // remaining embedded subgraph are exactly the DSU classes, and the outer
    // face of G[L_{>=i}] is the class of the original outer face.
    Dsu dsu(fs.face_count());
    std::vector<std::vector<int>> faces_at(g.n);
    for (int f = 0; f < fs.face_count(); ++f)
        for (int v : fs.boundary_vertices[f]) faces_at[v].push_back(f);

    for (int i = 1; i <= lay.m; ++i) {
        const int outer_class = dsu.find(fs.outer);
        std::vector<int> boundary;
        for (int v = 0; v < g.n; ++v) {
            if (lay.level_of[v] < i) continue;
            for (int f : faces_at[v])
                if (dsu.find(f) == outer_class) {
                    boundary.push_back(v);
                    break;
                }
        }
        std::vector<int> expected = lay.layers[i - 1];
        std::sort(expected.begin(), expected.end());
        if (boundary != expected)
            fail("outer boundary of G[L_{>=" + std::to_string(i) + "}] is not L_" +
                 std::to_string(i));

        // Remove layer i: merge across every edge with an endpoint in it.
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edges[e];
            if (lay.level_of[u] == i || lay.level_of[v] == i)
                dsu.unite(fs.face_left[e].first, fs.face_left[e].second);
        }
    }

    return rep;
}

} // namespace cdt
