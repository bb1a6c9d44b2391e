#include "cdt/dp.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cdt/oracle.hpp"

namespace cdt {

namespace {

constexpr int kMaxBag = 32; // 4 bits per position in a 128-bit key
constexpr int kInf = INT32_MAX / 2;

struct Raw {
    std::uint64_t lo, hi;
    int cost;
    std::uint8_t choice;
};

bool raw_less(const Raw& a, const Raw& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.choice < b.choice;
}

} // namespace

ContractionDP::Key ContractionDP::key_set(Key k, int pos, int val) {
    const int shift = (pos & 15) * 4;
    std::uint64_t& word = pos < 16 ? k.lo : k.hi;
    word = (word & ~(0xfull << shift)) | (static_cast<std::uint64_t>(val) << shift);
    return k;
}

int ContractionDP::key_get(const Key& k, int pos) {
    const std::uint64_t word = pos < 16 ? k.lo : k.hi;
    return static_cast<int>(word >> ((pos & 15) * 4) & 0xf);
}

int ContractionDP::Table::find(const Key& k) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || !(*it == k)) return -1;
    return static_cast<int>(it - keys.begin());
}

ContractionDP::ContractionDP(const ProblemSpec& prob, const Graph& g, const ContractionMap& cm,
                             const std::vector<ComponentOrbit>& orbits,
                             const NiceTreeDecomposition& ntd, const CandidateSet& cand)
    : prob_(prob), g_(g), cm_(cm), orbits_(orbits), ntd_(ntd), cand_(cand) {
    switch (prob.kind) {
        case ProblemKind::oct: plain_states_ = 3; break;
        case ProblemKind::eb: plain_states_ = 2; break;
        case ProblemKind::gfvs: plain_states_ = prob.group.size + 1; break;
        case ProblemKind::gfes: plain_states_ = prob.group.size; break;
    }
    if (plain_states_ > 16)
        throw instance_too_large("group too large for packed DP configurations");
    stats_.plain_states = plain_states_;

    for (const auto& orbit : orbits_)
        if (orbit.contracted && !orbit.feasible) return; // global NO for this X

    run();
}

int ContractionDP::state_count(int qv) const {
    return orbits_[qv].contracted ? orbits_[qv].orbit_count : plain_states_;
}

int ContractionDP::endpoint_value(const ProvEdge& pe, bool x_side, int va, int vb) const {
    const bool contracted = x_side ? pe.x_contracted : pe.y_contracted;
    const int base = x_side ? pe.x_base : pe.y_base;
    const bool on_first = x_side ? pe.x_on_first : !pe.x_on_first;
    const int val = on_first ? va : vb;

    switch (prob_.kind) {
        case ProblemKind::oct:
            if (contracted) return base ^ val;
            return val == 0 ? -1 : val - 1;
        case ProblemKind::eb:
            return contracted ? base ^ val : val;
        case ProblemKind::gfvs:
            if (contracted) return prob_.group.multiply(val, base);
            return val == 0 ? -1 : val - 1;
        case ProblemKind::gfes:
            return contracted ? prob_.group.multiply(val, base) : val;
    }
    return -1;
}

bool ContractionDP::apply_edge(const ProvEdge& pe, int va, int vb, int& cost) const {
    const int sx = endpoint_value(pe, true, va, vb);
    const int sy = endpoint_value(pe, false, va, vb);
    switch (prob_.kind) {
        case ProblemKind::oct:
            if (sx < 0 || sy < 0) return true;
            return sx != sy;
        case ProblemKind::gfvs:
            if (sx < 0 || sy < 0) return true;
            return sy == prob_.group.multiply(sx, pe.label);
        case ProblemKind::eb:
            if (sx != sy) return true;
            if (!pe.deletable) return false;
            ++cost;
            return true;
        case ProblemKind::gfes:
            if (sy == prob_.group.multiply(sx, pe.label)) return true;
            if (!pe.deletable) return false;
            ++cost;
            return true;
    }
    return false;
}

void ContractionDP::record(int node, size_t entries) {
    const double bound = std::pow(static_cast<double>(plain_states_),
                                  static_cast<double>(ntd_.nodes[node].bag.size()));
    stats_.max_table = std::max<long long>(stats_.max_table, static_cast<long long>(entries));
    if (bound > 0) {
        const double ratio = static_cast<double>(entries) / bound;
        stats_.max_table_ratio = std::max(stats_.max_table_ratio, ratio);
        if (static_cast<double>(entries) > bound) stats_.table_bound_ok = false;
    }
}

void ContractionDP::run() {
    const bool vertex_problem = is_vertex_problem(prob_.kind);
    const bool edge_problem = !vertex_problem;

    // Orbit base value per original vertex of contracted super-vertices.
    std::vector<std::uint8_t> base_of(g_.n, 0);
    for (int sv = 0; sv < cm_.quotient.n; ++sv) {
        if (!orbits_[sv].contracted) continue;
        for (size_t i = 0; i < cm_.members[sv].size(); ++i)
            base_of[cm_.members[sv][i]] = static_cast<std::uint8_t>(orbits_[sv].base[i]);
    }

    // Provenance metadata at introduce-edge nodes.
    prov_.assign(ntd_.nodes.size(), {});
    for (size_t t = 0; t < ntd_.nodes.size(); ++t) {
        const auto& node = ntd_.nodes[t];
        if (node.kind != NiceKind::introduce_edge) continue;
        for (int e : cm_.edge_provenance[node.edge_id]) {
            auto [x, y] = g_.edges[e];
            ProvEdge pe;
            pe.x_on_first = cm_.rep[x] == node.edge_u;
            pe.x_contracted = cm_.is_contracted[cm_.rep[x]];
            pe.y_contracted = cm_.is_contracted[cm_.rep[y]];
            pe.x_base = base_of[x];
            pe.y_base = base_of[y];
            pe.orig_edge = e;
            if (is_group_problem(prob_.kind))
                pe.label = static_cast<std::uint8_t>(prob_.labels[e]);
            pe.deletable =
                edge_problem && !pe.x_contracted && !pe.y_contracted && cand_.contains(e);
            prov_[t].push_back(pe);
        }
    }

    tables_.assign(ntd_.nodes.size(), {});
    std::array<std::uint8_t, kMaxBag> buf{};

    for (int t : ntd_.topo_order) {
        const auto& node = ntd_.nodes[t];
        const int bag_size = static_cast<int>(node.bag.size());
        if (bag_size > kMaxBag)
            throw instance_too_large("bag of size " + std::to_string(bag_size) +
                                     " exceeds the packed-configuration limit");
        Table& table = tables_[t];

        switch (node.kind) {
            case NiceKind::leaf: {
                table.keys.push_back({});
                table.cost.push_back(0);
                table.choice.push_back(0);
                break;
            }
            case NiceKind::introduce: {
                const Table& ct = tables_[node.child];
                const int p = static_cast<int>(std::lower_bound(node.bag.begin(), node.bag.end(),
                                                                node.vertex) -
                                               node.bag.begin());
                const int v = node.vertex;
                const bool plain = !orbits_[v].contracted;
                const int orig = plain ? cm_.members[v][0] : -1;
                std::vector<Raw> raws;
                raws.reserve(ct.keys.size() * state_count(v));
                for (size_t i = 0; i < ct.keys.size(); ++i) {
                    // shift digits at positions >= p up by one
                    const int child_size = bag_size - 1;
                    for (int q = 0; q < child_size; ++q)
                        buf[q < p ? q : q + 1] =
                            static_cast<std::uint8_t>(key_get(ct.keys[i], q));
                    for (int s = 0; s < state_count(v); ++s) {
                        if (plain && vertex_problem && s == 0 && !cand_.contains(orig)) continue;
                        buf[p] = static_cast<std::uint8_t>(s);
                        Key k{};
                        for (int q = 0; q < bag_size; ++q) k = key_set(k, q, buf[q]);
                        raws.push_back({k.lo, k.hi, ct.cost[i], 0});
                    }
                }
                std::sort(raws.begin(), raws.end(), raw_less);
                for (const Raw& r : raws) {
                    table.keys.push_back({r.lo, r.hi});
                    table.cost.push_back(r.cost);
                    table.choice.push_back(0);
                }
                break;
            }
            case NiceKind::forget: {
                const Table& ct = tables_[node.child];
                const auto& cbag = ntd_.nodes[node.child].bag;
                const int p = static_cast<int>(std::lower_bound(cbag.begin(), cbag.end(),
                                                                node.vertex) -
                                               cbag.begin());
                const int v = node.vertex;
                const bool plain = !orbits_[v].contracted;
                std::vector<Raw> raws;
                raws.reserve(ct.keys.size());
                const int child_size = bag_size + 1;
                for (size_t i = 0; i < ct.keys.size(); ++i) {
                    int s = -1;
                    for (int q = 0; q < child_size; ++q) {
                        const int val = key_get(ct.keys[i], q);
                        if (q == p)
                            s = val;
                        else
                            buf[q < p ? q : q - 1] = static_cast<std::uint8_t>(val);
                    }
                    Key k{};
                    for (int q = 0; q < bag_size; ++q) k = key_set(k, q, buf[q]);
                    const int charge = vertex_problem && plain && s == 0 ? 1 : 0;
                    raws.push_back({k.lo, k.hi, ct.cost[i] + charge,
                                    static_cast<std::uint8_t>(s)});
                }
                std::sort(raws.begin(), raws.end(), raw_less);
                for (const Raw& r : raws) {
                    if (!table.keys.empty() && table.keys.back() == Key{r.lo, r.hi}) continue;
                    table.keys.push_back({r.lo, r.hi});
                    table.cost.push_back(r.cost);
                    table.choice.push_back(r.choice);
                }
                break;
            }
            case NiceKind::introduce_edge: {
                const Table& ct = tables_[node.child];
                const int pa = static_cast<int>(std::lower_bound(node.bag.begin(),
                                                                 node.bag.end(), node.edge_u) -
                                                node.bag.begin());
                const int pb = static_cast<int>(std::lower_bound(node.bag.begin(),
                                                                 node.bag.end(), node.edge_v) -
                                                node.bag.begin());
                for (size_t i = 0; i < ct.keys.size(); ++i) {
                    const int va = key_get(ct.keys[i], pa);
                    const int vb = key_get(ct.keys[i], pb);
                    int cost = ct.cost[i];
                    bool ok = true;
                    for (const ProvEdge& pe : prov_[t]) {
                        if (!apply_edge(pe, va, vb, cost)) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    table.keys.push_back(ct.keys[i]);
                    table.cost.push_back(cost);
                    table.choice.push_back(0);
                }
                break;
            }
            case NiceKind::join: {
                const Table& c1 = tables_[node.child];
                const Table& c2 = tables_[node.child2];
                for (size_t i = 0; i < c1.keys.size(); ++i) {
                    const int j = c2.find(c1.keys[i]);
                    if (j < 0) continue;
                    table.keys.push_back(c1.keys[i]);
                    table.cost.push_back(c1.cost[i] + c2.cost[j]);
                    table.choice.push_back(0);
                }
                break;
            }
        }
        record(t, table.keys.size());
    }

    const Table& root = tables_[ntd_.root];
    const int idx = root.find({});
    if (idx >= 0) {
        feasible_ = true;
        root_cost_ = root.cost[idx];
    }
}

std::vector<int> ContractionDP::extract_solution() const {
    if (!feasible_) throw no_feasible_entry("no feasible root configuration");
    const bool vertex_problem = is_vertex_problem(prob_.kind);

    std::vector<int> sol;
    std::vector<std::pair<int, Key>> stack{{ntd_.root, Key{}}};
    while (!stack.empty()) {
        auto [t, k] = stack.back();
        stack.pop_back();
        const auto& node = ntd_.nodes[t];
        switch (node.kind) {
            case NiceKind::leaf:
                break;
            case NiceKind::introduce: {
                const int p = static_cast<int>(std::lower_bound(node.bag.begin(),
                                                                node.bag.end(), node.vertex) -
                                               node.bag.begin());
                Key ck{};
                for (int q = 0; q < static_cast<int>(node.bag.size()); ++q) {
                    if (q == p) continue;
                    ck = key_set(ck, q < p ? q : q - 1, key_get(k, q));
                }
                stack.emplace_back(node.child, ck);
                break;
            }
            case NiceKind::forget: {
                const int idx = tables_[t].find(k);
                if (idx < 0) throw no_feasible_entry("traceback lost its entry");
                const int s = tables_[t].choice[idx];
                const auto& cbag = ntd_.nodes[node.child].bag;
                const int p = static_cast<int>(std::lower_bound(cbag.begin(), cbag.end(),
                                                                node.vertex) -
                                               cbag.begin());
                Key ck{};
                for (int q = 0; q < static_cast<int>(cbag.size()); ++q) {
                    if (q == p)
                        ck = key_set(ck, q, s);
                    else
                        ck = key_set(ck, q, key_get(k, q < p ? q : q - 1));
                }
                if (vertex_problem && !orbits_[node.vertex].contracted && s == 0)
                    sol.push_back(cm_.members[node.vertex][0]);
                stack.emplace_back(node.child, ck);
                break;
            }
            case NiceKind::introduce_edge: {
                if (!vertex_problem) {
                    const int pa = static_cast<int>(std::lower_bound(node.bag.begin(),
                                                                     node.bag.end(),
                                                                     node.edge_u) -
                                                    node.bag.begin());
                    const int pb = static_cast<int>(std::lower_bound(node.bag.begin(),
                                                                     node.bag.end(),
                                                                     node.edge_v) -
                                                    node.bag.begin());
                    const int va = key_get(k, pa);
                    const int vb = key_get(k, pb);
                    for (const ProvEdge& pe : prov_[t]) {
                        int before = 0;
                        if (!apply_edge(pe, va, vb, before))
                            throw no_feasible_entry("traceback hit a pruned edge");
                        if (before > 0) sol.push_back(pe.orig_edge);
                    }
                }
                stack.emplace_back(node.child, k);
                break;
            }
            case NiceKind::join:
                stack.emplace_back(node.child, k);
                stack.emplace_back(node.child2, k);
                break;
        }
    }
    std::sort(sol.begin(), sol.end());
    return sol;
}

DPResult solve_on_td(const ProblemSpec& prob, const Graph& g, const ContractionMap& cm,
                     const NiceTreeDecomposition& ntd, const CandidateSet& cand) {
    if (cand.edge_kind == is_vertex_problem(prob.kind))
        throw validation_error("candidate set kind does not match the problem");
    if (auto bad = validate_nice(cm.quotient, ntd))
        throw decomposition_mismatch("nice decomposition does not fit the quotient: " +
                                     bad->detail);

    const auto orbits = all_orbits(g, cm, prob);
    DPResult result;
    for (const auto& orbit : orbits)
        if (orbit.contracted && !orbit.feasible) return result;

    ContractionDP dp(prob, g, cm, orbits, ntd, cand);
    result.stats = dp.stats();
    if (!dp.feasible()) return result;

    result.feasible = true;
    result.cost = dp.cost();
    result.solution = dp.extract_solution();
    if (static_cast<int>(result.solution.size()) != result.cost)
        throw error("internal: witness size disagrees with DP cost");
    if (has_violation(prob, g, result.solution))
        throw error("internal: DP witness failed the violation check");
    return result;
}

} // namespace cdt
