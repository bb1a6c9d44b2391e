#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cdt/candidate.hpp"
#include "cdt/dp.hpp"
#include "cdt/graph.hpp"
#include "cdt/layering.hpp"
#include "cdt/problem.hpp"

namespace cdt {

struct SolveRequest {
    ProblemSpec prob;
    EmbeddedGraph eg;
    int k = 0;
    bool minimize = false;     // ignore k, find the optimum
    int p_override = 0;        // 0: floor(sqrt(k)), at least 1
    std::string candidate_provider = "trivial";
    long long max_pairs = 10'000'000;
};

struct SolveStats {
    long long pairs = 0;
    int p = 0;
    int max_width = -1;
    double mean_width = 0.0;
    double max_width_ratio = 0.0; // width / (p + |Y'| + 1)
    long long max_table = 0;
    double max_table_ratio = 0.0;
    bool table_bound_ok = true;
    long long time_ms = 0;
};

struct SolveResult {
    bool feasible = false;
    int optimum = -1;
    std::vector<int> solution; // vertex ids or edge ids
    SolveStats stats;
};

// Number of pairs (i, Y') the enumeration will produce; saturates at cap+1.
long long count_pairs(const std::vector<std::vector<int>>& supports, int budget, long long cap);

// Vertices of Z_i eligible for Y': candidate vertices themselves, or the
// endpoints of candidate edges for edge problems.
std::vector<std::vector<int>> pair_supports(const ZFamily& zf, const Graph& g,
                                            const CandidateSet& cand);

// Visits pairs with i ascending and Y' ordered by size then lexicographically;
// stops early if the callback returns false.
void enumerate_pairs(const std::vector<std::vector<int>>& supports, int budget,
                     const std::function<bool(int i, const std::vector<int>& yprime)>& visit);

// Baker-style driver: layer, build Z-sets, enumerate (i, Y'), contract
// Z_i \ Y', decompose, run the contraction-friendly DP, return the best
// verified solution within budget.
SolveResult solve(const SolveRequest& req);

} // namespace cdt
