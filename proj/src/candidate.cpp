#include "cdt/candidate.hpp"

#include <algorithm>
#include <numeric>

namespace cdt {

CandidateSet CandidateSet::trivial(const Graph& g, ProblemKind kind) {
    CandidateSet c;
    c.edge_kind = !is_vertex_problem(kind);
    c.members.resize(c.edge_kind ? g.m() : g.n);
    std::iota(c.members.begin(), c.members.end(), 0);
    c.mask.assign(c.members.size(), 1);
    return c;
}

CandidateSet CandidateSet::of_members(const Graph& g, bool edge_kind, std::vector<int> members) {
    CandidateSet c;
    c.edge_kind = edge_kind;
    c.mask.assign(edge_kind ? g.m() : g.n, 0);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int id : members) {
        if (id < 0 || id >= static_cast<int>(c.mask.size()))
            throw validation_error("candidate id out of range");
        c.mask[id] = 1;
    }
    c.members = std::move(members);
    return c;
}

CandidateSet make_candidates(const std::string& provider, const Graph& g, ProblemKind kind) {
    if (provider == "trivial") return CandidateSet::trivial(g, kind);
    throw parse_error("unknown candidate provider: " + provider);
}

} // namespace cdt
