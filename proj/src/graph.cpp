#include "cdt/graph.hpp"

#include <algorithm>
#include <queue>

namespace cdt {

namespace {
std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}
} // namespace

Graph Graph::make(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) throw validation_error("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    g.edges.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw validation_error("edge endpoint out of range");
        if (u == v) throw validation_error("self-loop rejected");
        if (u > v) std::swap(u, v);
        const auto key = edge_key(u, v);
        if (g.edge_ids_.count(key)) throw validation_error("parallel edge rejected");
        const int id = static_cast<int>(g.edges.size());
        g.edge_ids_.emplace(key, id);
        g.edges.emplace_back(u, v);
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    return g;
}

int Graph::edge_index(int u, int v) const {
    auto it = edge_ids_.find(edge_key(u, v));
    return it == edge_ids_.end() ? -1 : it->second;
}

bool Graph::is_connected() const {
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                q.push(u);
            }
    }
    return cnt == n;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (int u : adj[v])
                if (comp[u] < 0) {
                    comp[u] = id;
                    q.push(u);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

void EmbeddedGraph::validate() const {
    if (static_cast<int>(rotation.size()) != graph.n)
        throw validation_error("rotation list has wrong length");
    for (int v = 0; v < graph.n; ++v) {
        auto a = graph.adj[v];
        auto r = rotation[v];
        std::sort(a.begin(), a.end());
        std::sort(r.begin(), r.end());
        if (a != r) throw validation_error("rotation of vertex " + std::to_string(v) +
                                           " is not a permutation of its neighbors");
    }
    if (graph.m() > 0) {
        auto [u, v] = outer_anchor;
        if (u < 0 || u >= graph.n || v < 0 || v >= graph.n || graph.edge_index(u, v) < 0)
            throw dangling_anchor("outer_anchor is not an edge of the graph");
    }
}

int EmbeddedGraph::rotation_index(int v, int u) const {
    const auto& r = rotation[v];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return static_cast<int>(i);
    return -1;
}

FaceSet trace_faces(const EmbeddedGraph& eg) {
    const Graph& g = eg.graph;
    if (!g.is_connected()) throw validation_error("face tracing requires a connected graph");
    eg.validate();

    FaceSet fs;
    if (g.m() == 0) {
        // Single vertex (or empty): one face covering everything.
        fs.faces.push_back({});
        fs.boundary_vertices.push_back({});
        for (int v = 0; v < g.n; ++v) fs.boundary_vertices[0].push_back(v);
        fs.outer = 0;
        return fs;
    }

    // Position of u inside rotation[v], for O(1) walk steps.
    std::vector<std::unordered_map<int, int>> pos(g.n);
    for (int v = 0; v < g.n; ++v)
        for (size_t i = 0; i < eg.rotation[v].size(); ++i)
            pos[v].emplace(eg.rotation[v][i], static_cast<int>(i));

    fs.face_left.assign(g.m(), {-1, -1});
    auto slot = [&](int from, int to) -> int& {
        const int e = g.edge_index(from, to);
        return from < to ? fs.face_left[e].first : fs.face_left[e].second;
    };

    for (int e = 0; e < g.m(); ++e) {
        for (int dir = 0; dir < 2; ++dir) {
            int su = dir == 0 ? g.edges[e].first : g.edges[e].second;
            int sv = dir == 0 ? g.edges[e].second : g.edges[e].first;
            if (slot(su, sv) >= 0) continue;
            const int fid = fs.face_count();
            fs.faces.emplace_back();
            int u = su, v = sv;
            do {
                slot(u, v) = fid;
                fs.faces.back().emplace_back(u, v);
                const int i = pos[v].at(u);
                const int w = eg.rotation[v][(i + 1) % eg.rotation[v].size()];
                u = v;
                v = w;
            } while (!(u == su && v == sv));
        }
    }

    if (g.n - g.m() + fs.face_count() != 2)
        throw euler_violation("rotation system is not a sphere embedding: V-E+F = " +
                              std::to_string(g.n - g.m() + fs.face_count()));

    fs.boundary_vertices.assign(fs.face_count(), {});
    for (int f = 0; f < fs.face_count(); ++f) {
        auto& b = fs.boundary_vertices[f];
        for (auto [u, v] : fs.faces[f]) b.push_back(u);
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }

    fs.outer = fs.face_of(g, eg.outer_anchor.first, eg.outer_anchor.second);
    return fs;
}

int FaceSet::face_of(const Graph& g, int from, int to) const {
    const int e = g.edge_index(from, to);
    if (e < 0) throw dangling_anchor("directed edge (" + std::to_string(from) + "," +
                                     std::to_string(to) + ") does not exist");
    return from < to ? face_left[e].first : face_left[e].second;
}

VFIGraph build_vfi(const EmbeddedGraph& eg, const FaceSet& fs) {
    VFIGraph vfi;
    vfi.num_vertices = eg.graph.n;
    vfi.num_faces = fs.face_count();
    vfi.adj.assign(vfi.node_count(), {});
    for (int f = 0; f < fs.face_count(); ++f) {
        for (int v : fs.boundary_vertices[f]) {
            vfi.adj[v].push_back(vfi.face_node(f));
            vfi.adj[vfi.face_node(f)].push_back(v);
        }
    }
    return vfi;
}

bool VFIGraph::is_connected() const {
    const int N = node_count();
    if (N <= 1) return true;
    std::vector<char> seen(N, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                q.push(u);
            }
    }
    return cnt == N;
}

EmbeddedGraph induced_embedding(const EmbeddedGraph& eg, const std::vector<int>& keep,
                                std::vector<int>* old_of_new) {
    std::vector<int> new_id(eg.graph.n, -1);
    for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : eg.graph.edges)
        if (new_id[u] >= 0 && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);

    EmbeddedGraph out;
    out.graph = Graph::make(static_cast<int>(keep.size()), std::move(edges));
    out.rotation.assign(keep.size(), {});
    for (size_t i = 0; i < keep.size(); ++i)
        for (int u : eg.rotation[keep[i]])
            if (new_id[u] >= 0) out.rotation[i].push_back(new_id[u]);
    if (old_of_new) *old_of_new = keep;
    return out;
}

} // namespace cdt
