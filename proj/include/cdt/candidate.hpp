#pragma once

#include <vector>

#include "cdt/graph.hpp"
#include "cdt/problem.hpp"

namespace cdt {

// Vertex or edge set guaranteed to contain some optimal solution. Solutions
// are always searched inside it; the trivial provider returns everything.
struct CandidateSet {
    bool edge_kind = false;
    std::vector<int> members; // vertex ids or edge ids, sorted
    std::vector<char> mask;   // indexed by vertex / edge id

    bool contains(int id) const { return mask[id]; }

    static CandidateSet trivial(const Graph& g, ProblemKind kind);
    static CandidateSet of_members(const Graph& g, bool edge_kind, std::vector<int> members);
};

// Provider registry: only "trivial" is implemented; the contract is that a
// solution of size <= k exists iff one inside the candidate set does.
CandidateSet make_candidates(const std::string& provider, const Graph& g, ProblemKind kind);

} // namespace cdt
