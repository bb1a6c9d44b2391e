#include "cdt/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "cdt/contraction.hpp"
#include "cdt/oracle.hpp"
#include "cdt/treewidth.hpp"

namespace cdt {

namespace {

int floor_sqrt(int k) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(k)));
    while (static_cast<long long>(r + 1) * (r + 1) <= k) ++r;
    while (static_cast<long long>(r) * r > k) --r;
    return r;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

std::vector<std::vector<int>> pair_supports(const ZFamily& zf, const Graph& g,
                                            const CandidateSet& cand) {
    std::vector<char> eligible(g.n, 0);
    if (cand.edge_kind) {
        for (int e : cand.members) {
            eligible[g.edges[e].first] = 1;
            eligible[g.edges[e].second] = 1;
        }
    } else {
        for (int v : cand.members) eligible[v] = 1;
    }
    std::vector<std::vector<int>> supports(zf.p);
    for (int i = 0; i < zf.p; ++i)
        for (int v : zf.zsets[i])
            if (eligible[v]) supports[i].push_back(v);
    return supports;
}

long long count_pairs(const std::vector<std::vector<int>>& supports, int budget, long long cap) {
    long long total = 0;
    for (const auto& sup : supports) {
        const long long n = static_cast<long long>(sup.size());
        long long binom = 1; // C(n, s)
        for (int s = 0; s <= budget; ++s) {
            total += binom;
            if (total > cap) return cap + 1;
            if (s >= n) break;
            if (binom > cap * 2) {
                total = cap + 1;
                return total;
            }
            binom = binom * (n - s) / (s + 1);
        }
    }
    return total;
}

void enumerate_pairs(const std::vector<std::vector<int>>& supports, int budget,
                     const std::function<bool(int, const std::vector<int>&)>& visit) {
    std::vector<int> pick, yprime;
    for (size_t i = 0; i < supports.size(); ++i) {
        const auto& sup = supports[i];
        const int n = static_cast<int>(sup.size());
        for (int size = 0; size <= std::min(budget, n); ++size) {
            pick.resize(size);
            for (int j = 0; j < size; ++j) pick[j] = j;
            while (true) {
                yprime.clear();
                for (int j : pick) yprime.push_back(sup[j]);
                if (!visit(static_cast<int>(i) + 1, yprime)) return;
                int j = size - 1;
                while (j >= 0 && pick[j] == n - size + j) --j;
                if (j < 0) break;
                ++pick[j];
                for (int l = j + 1; l < size; ++l) pick[l] = pick[l - 1] + 1;
            }
        }
    }
}

namespace {

SolveResult solve_decision(const SolveRequest& req, const Graph& g, const Layering& lay, int k) {
    SolveResult result;
    auto& stats = result.stats;

    if (k == 0) {
        stats.p = 1;
        if (!has_violation(req.prob, g, {})) {
            result.feasible = true;
            result.optimum = 0;
        }
        return result;
    }

    const int p = req.p_override > 0 ? req.p_override : std::max(1, floor_sqrt(k));
    stats.p = p;
    const ZFamily zf = build_zsets(lay, p);
    const CandidateSet cand = make_candidates(req.candidate_provider, g, req.prob.kind);
    const int budget = cand.edge_kind ? ceil_div(2 * k, p) : ceil_div(k, p);

    const auto supports = pair_supports(zf, g, cand);
    const long long total = count_pairs(supports, budget, req.max_pairs);
    if (total > req.max_pairs)
        throw pair_limit_exceeded("pair enumeration would exceed max_pairs = " +
                                  std::to_string(req.max_pairs));

    int best_cost = -1;
    std::vector<int> best_solution;
    double width_sum = 0;
    long long decomposed = 0;

    enumerate_pairs(supports, budget, [&](int i, const std::vector<int>& yprime) {
        ++stats.pairs;
        std::vector<int> x;
        std::set_difference(zf.zsets[i - 1].begin(), zf.zsets[i - 1].end(), yprime.begin(),
                            yprime.end(), std::back_inserter(x));

        const ContractionMap cm = contract(g, x);
        const auto orbits = all_orbits(g, cm, req.prob);
        for (const auto& orbit : orbits)
            if (orbit.contracted && !orbit.feasible) return true; // hypothesis dead

        const TreeDecomposition td = heuristic_decompose(cm.quotient);
        const NiceTreeDecomposition ntd = make_nice(cm.quotient, td);
        const int width = td.width();
        stats.max_width = std::max(stats.max_width, width);
        width_sum += width;
        ++decomposed;
        stats.max_width_ratio =
            std::max(stats.max_width_ratio,
                     static_cast<double>(width) / (p + static_cast<int>(yprime.size()) + 1));

        const DPResult dp = solve_on_td(req.prob, g, cm, ntd, cand);
        stats.max_table = std::max(stats.max_table, dp.stats.max_table);
        stats.max_table_ratio = std::max(stats.max_table_ratio, dp.stats.max_table_ratio);
        stats.table_bound_ok = stats.table_bound_ok && dp.stats.table_bound_ok;
        if (dp.feasible && (best_cost < 0 || dp.cost < best_cost)) {
            best_cost = dp.cost;
            best_solution = dp.solution;
        }
        return true;
    });

    if (decomposed > 0) stats.mean_width = width_sum / static_cast<double>(decomposed);
    if (best_cost >= 0 && best_cost <= k) {
        result.feasible = true;
        result.optimum = best_cost;
        result.solution = std::move(best_solution);
    }
    return result;
}

} // namespace

SolveResult solve(const SolveRequest& req) {
    const auto start = std::chrono::steady_clock::now();
    const Graph& g = req.eg.graph;
    if (!g.is_connected())
        throw validation_error("solve requires a connected graph; split components first");
    if (req.k < 0) throw validation_error("k must be >= 0");
    if (is_group_problem(req.prob.kind) &&
        static_cast<int>(req.prob.labels.size()) != g.m())
        throw validation_error("labels missing for a group-labeled problem");

    const FaceSet fs = trace_faces(req.eg);
    const VFIGraph vfi = build_vfi(req.eg, fs);
    const Layering lay = compute_layers(vfi, fs.outer);

    SolveResult result;
    if (req.minimize) {
        const int cap = is_vertex_problem(req.prob.kind) ? g.n : g.m();
        for (int k = 0; k <= cap; ++k) {
            result = solve_decision(req, g, lay, k);
            if (result.feasible) break;
        }
    } else {
        result = solve_decision(req, g, lay, req.k);
    }

    result.stats.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return result;
}

} // namespace cdt
