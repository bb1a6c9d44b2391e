#pragma once

#include <string>
#include <vector>

#include "cdt/graph.hpp"

namespace cdt {

// Onion-peeling layers: L_i holds the vertices whose vertex-face distance
// from the outer face is 2i-1. layers[0] is L_1; level_of is 1-based.
struct Layering {
    std::vector<std::vector<int>> layers;
    std::vector<int> level_of;
    int m = 0;
};

// Z_i = union of all layers whose index is congruent to i modulo p
// (residues 1..p, with p standing for residue 0). The sets partition V.
struct ZFamily {
    int p = 0;
    std::vector<std::vector<int>> zsets;
    std::vector<int> zindex_of; // vertex -> i in [1..p]
};

struct LayerReport {
    bool ok = true;
    std::vector<std::string> failures;
};

Layering compute_layers(const VFIGraph& vfi, int outer_face);
ZFamily build_zsets(const Layering& lay, int p);

// Verifies, with witnesses on failure:
//   (a) adjacent vertices differ by at most one layer,
//   (b) vertices sharing a face boundary differ by at most one layer,
//   (c) L_i is exactly the outer-face boundary of the embedding induced
//       on L_{>=i}, for every i.
LayerReport check_layer_invariants(const EmbeddedGraph& eg, const FaceSet& fs,
                                   const Layering& lay);

} // namespace cdt
