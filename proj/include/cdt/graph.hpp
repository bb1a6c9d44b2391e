#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdt/errors.hpp"

namespace cdt {

// Simple undirected graph. Edges are stored with u < v; the index into
// `edges` is the edge id used everywhere (labels, candidate sets, witnesses).
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    static Graph make(int n, std::vector<std::pair<int, int>> edge_list);

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    // Edge id of {u,v}, or -1.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    bool is_connected() const;
    // Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<int>> components() const;

  private:
    std::unordered_map<std::uint64_t, int> edge_ids_;
};

// Graph plus a rotation system (clockwise neighbor order per vertex) and a
// directed edge whose left face is the designated outer face. Face walking
// uses next(u,v) = (v, successor of u in rotation[v]).
struct EmbeddedGraph {
    Graph graph;
    std::vector<std::vector<int>> rotation;
    std::pair<int, int> outer_anchor{-1, -1};

    // Checks rotation[v] is a permutation of adj[v] and the anchor exists.
    void validate() const;
    // Position of neighbor u in rotation[v].
    int rotation_index(int v, int u) const;
};

struct FaceSet {
    // Each face as its cycle of directed edges, in walk order.
    std::vector<std::vector<std::pair<int, int>>> faces;
    // Sorted distinct vertices on each face boundary.
    std::vector<std::vector<int>> boundary_vertices;
    // face_left[e].first = face left of (u,v), .second = face left of (v,u),
    // for edges[e] = (u,v) with u < v.
    std::vector<std::pair<int, int>> face_left;
    int outer = -1;

    int face_count() const { return static_cast<int>(faces.size()); }
    int face_of(const Graph& g, int from, int to) const;
};

// Bipartite vertex-face incidence graph: nodes 0..n-1 are graph vertices,
// nodes n..n+F-1 are faces.
struct VFIGraph {
    int num_vertices = 0;
    int num_faces = 0;
    std::vector<std::vector<int>> adj;

    int face_node(int face_id) const { return num_vertices + face_id; }
    int node_count() const { return num_vertices + num_faces; }
    bool is_connected() const;
};

// Walks all faces of the embedding. Throws euler_violation if the rotation
// system is not a sphere embedding, dangling_anchor if the anchor is not an
// edge. Requires a connected graph.
FaceSet trace_faces(const EmbeddedGraph& eg);

VFIGraph build_vfi(const EmbeddedGraph& eg, const FaceSet& fs);

// Induced embedded subgraph on `keep` (sorted vertex ids), rotations filtered.
// The outer anchor is not meaningful for the result and is left unset.
EmbeddedGraph induced_embedding(const EmbeddedGraph& eg, const std::vector<int>& keep,
                                std::vector<int>* old_of_new = nullptr);

} // namespace cdt
