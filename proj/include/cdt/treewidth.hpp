#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdt/graph.hpp"

namespace cdt {

// Rooted tree decomposition. Node 0 is the root (parent -1).
struct TreeDecomposition {
    struct Node {
        int parent = -1;
        std::vector<int> bag; // sorted
        std::vector<int> children;
    };
    std::vector<Node> nodes;

    int width() const;
    // sigma(t) = bag(t) intersect bag(parent); empty for the root.
    std::vector<int> adhesion(int t) const;
    // gamma(t) = union of bags in the subtree of t.
    std::vector<int> cone(int t) const;
};

struct DecompositionViolation {
    std::string kind; // "vertex-cover" | "edge-cover" | "connectivity"
    std::string detail;
};

enum class NiceKind { leaf, introduce, forget, join, introduce_edge };

// Nice form: leaf bags and the root bag are empty; every graph edge is
// assigned to exactly one introduce_edge node whose bag contains both ends.
struct NiceTreeDecomposition {
    struct Node {
        NiceKind kind = NiceKind::leaf;
        int parent = -1;
        int child = -1, child2 = -1;
        std::vector<int> bag;   // sorted
        int vertex = -1;        // introduce/forget
        int edge_u = -1, edge_v = -1, edge_id = -1; // introduce_edge (edge_id into graph.edges)
    };
    std::vector<Node> nodes;
    int root = -1;
    int graph_n = 0;
    int graph_m = 0;
    std::vector<int> topo_order; // children before parents

    int width() const;
};

// Min-fill elimination ordering; ties broken by fill count, then degree, then
// lowest vertex id. Works on disconnected graphs.
TreeDecomposition heuristic_decompose(const Graph& g);

// Checks the three tree-decomposition axioms; nullopt when valid.
std::optional<DecompositionViolation> validate_decomposition(const Graph& g,
                                                             const TreeDecomposition& td);

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

std::optional<DecompositionViolation> validate_nice(const Graph& g,
                                                    const NiceTreeDecomposition& ntd);

// Exact treewidth via dynamic programming over elimination prefixes;
// throws instance_too_large above the cap.
int exact_treewidth(const Graph& g, int max_n = 15);

} // namespace cdt
