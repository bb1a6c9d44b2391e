#pragma once

#include <optional>
#include <vector>

#include "cdt/graph.hpp"
#include "cdt/problem.hpp"

namespace cdt {

struct OracleResult {
    bool feasible = false;
    int optimum = -1;
    std::vector<int> witness; // vertex ids or edge ids, sorted
};

// True iff g minus the deletion set still violates: non-bipartite for oct/eb,
// has a non-null cycle for gfvs/gfes. For edge problems the set holds edge ids.
bool has_violation(const ProblemSpec& prob, const Graph& g, const std::vector<int>& deleted);

// Exact optimum by subset enumeration in increasing size, lexicographic within
// a size; the witness is the first optimum found, so runs are deterministic.
OracleResult brute_force(const ProblemSpec& prob, const Graph& g,
                         int max_n = 20, int max_m = 24);

// As brute_force over solutions disjoint from the vertex set X (for edge
// problems: no solution edge may touch X). feasible = false when even the
// full allowed set leaves a violation.
OracleResult brute_force_restricted(const ProblemSpec& prob, const Graph& g,
                                    const std::vector<int>& x,
                                    int max_n = 20, int max_m = 24);

} // namespace cdt
