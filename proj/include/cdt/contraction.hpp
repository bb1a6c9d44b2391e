#pragma once

#include <vector>

#include "cdt/graph.hpp"
#include "cdt/problem.hpp"

namespace cdt {

// Quotient of g by the connected components of G[X]. Vertices outside X map
// to singleton super-vertices with is_contracted = false; every component of
// G[X] (including singletons) becomes one contracted super-vertex.
struct ContractionMap {
    Graph quotient;
    std::vector<int> rep;                       // original vertex -> super-vertex
    std::vector<std::vector<int>> members;      // super-vertex -> sorted original vertices
    std::vector<char> is_contracted;            // super-vertex -> component of G[X]?
    std::vector<std::vector<int>> edge_provenance; // quotient edge -> original edge ids
    std::vector<std::vector<int>> internal_edges;  // super-vertex -> original edge ids inside

    bool in_x(int original_vertex) const { return is_contracted[rep[original_vertex]]; }
};

// Admissible states of one contracted component under the hypothesis that the
// solution avoids it. For oct/eb the orbit is the two bipartition flips; for
// gfvs/gfes it is the g left-translates of one consistent labeling. `base`
// holds the orbit-0 assignment per member vertex (indexed like `members`).
struct ComponentOrbit {
    bool contracted = false;
    bool feasible = true;
    int orbit_count = 1;
    std::vector<int> base;
};

ContractionMap contract(const Graph& g, const std::vector<int>& x);

ComponentOrbit component_orbit(const Graph& g, const std::vector<int>& component,
                               const ProblemSpec& prob);

// Orbit per quotient super-vertex (trivial entries for plain vertices).
std::vector<ComponentOrbit> all_orbits(const Graph& g, const ContractionMap& cm,
                                       const ProblemSpec& prob);

} // namespace cdt
