#include "cdt/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace cdt {

namespace {

// Row-per-vertex adjacency bitsets; n stays in the low thousands here.
struct BitAdj {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitAdj(const Graph& g) : n(g.n), words((g.n + 63) / 64), bits(size_t(g.n) * words, 0) {
        for (auto [u, v] : g.edges) {
            set(u, v);
            set(v, u);
        }
    }
    std::uint64_t* row(int v) { return bits.data() + size_t(v) * words; }
    const std::uint64_t* row(int v) const { return bits.data() + size_t(v) * words; }
    void set(int u, int v) { row(u)[v >> 6] |= 1ull << (v & 63); }
    void clear(int u, int v) { row(u)[v >> 6] &= ~(1ull << (v & 63)); }
    bool test(int u, int v) const { return row(u)[v >> 6] >> (v & 63) & 1; }
    int degree(int v) const {
        int d = 0;
        for (int w = 0; w < words; ++w) d += std::popcount(row(v)[w]);
        return d;
    }
};

// Number of non-adjacent neighbor pairs of v.
long long fill_count(const BitAdj& a, int v, std::vector<int>& nbrs) {
    nbrs.clear();
    for (int w = 0; w < a.words; ++w) {
        std::uint64_t x = a.row(v)[w];
        while (x) {
            nbrs.push_back(w * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    long long missing = 0;
    for (size_t i = 0; i < nbrs.size(); ++i) {
        const std::uint64_t* r = a.row(nbrs[i]);
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            const int u = nbrs[j];
            missing += !(r[u >> 6] >> (u & 63) & 1);
        }
    }
    return missing;
}

} // namespace

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

std::vector<int> TreeDecomposition::adhesion(int t) const {
    if (nodes[t].parent < 0) return {};
    std::vector<int> out;
    std::set_intersection(nodes[t].bag.begin(), nodes[t].bag.end(),
                          nodes[nodes[t].parent].bag.begin(), nodes[nodes[t].parent].bag.end(),
                          std::back_inserter(out));
    return out;
}

std::vector<int> TreeDecomposition::cone(int t) const {
    std::set<int> acc;
    std::vector<int> stack{t};
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        acc.insert(nodes[s].bag.begin(), nodes[s].bag.end());
        for (int c : nodes[s].children) stack.push_back(c);
    }
    return {acc.begin(), acc.end()};
}

TreeDecomposition heuristic_decompose(const Graph& g) {
    TreeDecomposition td;
    if (g.n == 0) {
        td.nodes.push_back({});
        return td;
    }

    BitAdj adj(g);
    std::vector<long long> fills(g.n);
    std::vector<int> degs(g.n), scratch;
    for (int v = 0; v < g.n; ++v) {
        fills[v] = fill_count(adj, v, scratch);
        degs[v] = adj.degree(v);
    }

    std::vector<char> eliminated(g.n, 0);
    std::vector<int> order;
    std::vector<std::vector<int>> bags(g.n);
    order.reserve(g.n);

    std::vector<int> dirty;
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v) {
            if (eliminated[v]) continue;
            if (best < 0 || fills[v] < fills[best] ||
                (fills[v] == fills[best] && (degs[v] < degs[best] ||
                                             (degs[v] == degs[best] && v < best))))
                best = v;
        }
        const int v = best;
        eliminated[v] = 1;
        order.push_back(v);

        std::vector<int> nbrs;
        for (int w = 0; w < adj.words; ++w) {
            std::uint64_t x = adj.row(v)[w];
            while (x) {
                nbrs.push_back(w * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        bags[v] = nbrs;
        bags[v].push_back(v);
        std::sort(bags[v].begin(), bags[v].end());

        dirty.clear();
        for (int u : nbrs) {
            adj.clear(u, v);
            adj.clear(v, u);
            dirty.push_back(u);
        }
        for (size_t i = 0; i < nbrs.size(); ++i) {
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                const int a = nbrs[i], b = nbrs[j];
                if (adj.test(a, b)) continue;
                adj.set(a, b);
                adj.set(b, a);
                // A new edge (a,b) lowers the fill count of their common
                // neighbors too.
                for (int w = 0; w < adj.words; ++w) {
                    std::uint64_t x = adj.row(a)[w] & adj.row(b)[w];
                    while (x) {
                        dirty.push_back(w * 64 + std::countr_zero(x));
                        x &= x - 1;
                    }
                }
            }
        }
        std::sort(dirty.begin(), dirty.end());
        dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
        for (int u : dirty) {
            if (eliminated[u]) continue;
            fills[u] = fill_count(adj, u, scratch);
            degs[u] = adj.degree(u);
        }
    }

    // Bag of v attaches under the bag of its first-eliminated higher neighbor;
    // bags with none (component roots) attach under the overall root.
    std::vector<int> when(g.n);
    for (int i = 0; i < g.n; ++i) when[order[i]] = i;

    std::vector<int> node_of(g.n);
    td.nodes.resize(g.n);
    const int root_v = order.back();
    // Root node first so node 0 is the root.
    node_of[root_v] = 0;
    int next = 1;
    for (int i = g.n - 2; i >= 0; --i) node_of[order[i]] = next++;

    for (int v = 0; v < g.n; ++v) td.nodes[node_of[v]].bag = bags[v];
    for (int i = 0; i < g.n - 1; ++i) {
        const int v = order[i];
        int parent_v = -1;
        for (int u : bags[v])
            if (u != v && (parent_v < 0 || when[u] < when[parent_v])) parent_v = u;
        const int p = parent_v < 0 ? node_of[root_v] : node_of[parent_v];
        td.nodes[node_of[v]].parent = p;
        td.nodes[p].children.push_back(node_of[v]);
    }
    return td;
}

std::optional<DecompositionViolation> validate_decomposition(const Graph& g,
                                                             const TreeDecomposition& td) {
    std::vector<char> covered(g.n, 0);
    for (const auto& node : td.nodes) {
        for (size_t i = 0; i + 1 < node.bag.size(); ++i)
            if (node.bag[i] >= node.bag[i + 1])
                return DecompositionViolation{"vertex-cover", "bag not sorted/unique"};
        for (int v : node.bag) {
            if (v < 0 || v >= g.n)
                return DecompositionViolation{"vertex-cover", "bag vertex out of range"};
            covered[v] = 1;
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (!covered[v])
            return DecompositionViolation{"vertex-cover", "vertex " + std::to_string(v) +
                                                              " is in no bag"};

    for (auto [u, v] : g.edges) {
        bool found = false;
        for (const auto& node : td.nodes) {
            if (std::binary_search(node.bag.begin(), node.bag.end(), u) &&
                std::binary_search(node.bag.begin(), node.bag.end(), v)) {
                found = true;
                break;
            }
        }
        if (!found)
            return DecompositionViolation{"edge-cover", "edge (" + std::to_string(u) + "," +
                                                            std::to_string(v) + ") in no bag"};
    }

    // Occurrence connectivity: contiguous bag occurrences of each vertex must
    // form one subtree; count, per vertex, occurrences whose parent lacks it.
    std::vector<int> tops(g.n, 0);
    for (size_t t = 0; t < td.nodes.size(); ++t) {
        const auto& node = td.nodes[t];
        for (int v : node.bag) {
            const int p = node.parent;
            if (p < 0 || !std::binary_search(td.nodes[p].bag.begin(), td.nodes[p].bag.end(), v))
                ++tops[v];
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (tops[v] > 1)
            return DecompositionViolation{"connectivity", "occurrences of vertex " +
                                                              std::to_string(v) +
                                                              " form " + std::to_string(tops[v]) +
                                                              " components"};
    return std::nullopt;
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

namespace {

struct NiceBuilder {
    const Graph& g;
    const TreeDecomposition& td;
    NiceTreeDecomposition out;

    int add(NiceTreeDecomposition::Node node) {
        out.nodes.push_back(std::move(node));
        return static_cast<int>(out.nodes.size()) - 1;
    }

    int link(int child, NiceTreeDecomposition::Node node) {
        node.child = child;
        const int id = add(std::move(node));
        out.nodes[child].parent = id;
        return id;
    }

    // Chain from an empty leaf introducing `bag` in ascending order.
    int build_leaf_chain(const std::vector<int>& bag) {
        int cur = add({NiceKind::leaf, -1, -1, -1, {}, -1, -1, -1, -1});
        std::vector<int> have;
        for (int v : bag) {
            have.push_back(v);
            NiceTreeDecomposition::Node node;
            node.kind = NiceKind::introduce;
            node.vertex = v;
            node.bag = have;
            cur = link(cur, std::move(node));
        }
        return cur;
    }

    // Transform a node with bag `from` into bag `to`: forgets first, then
    // introduces, so intermediate bags never exceed max(|from|,|to|).
    int morph(int cur, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> have = from;
        std::vector<int> drop, gain;
        std::set_difference(from.begin(), from.end(), to.begin(), to.end(),
                            std::back_inserter(drop));
        std::set_difference(to.begin(), to.end(), from.begin(), from.end(),
                            std::back_inserter(gain));
        for (int v : drop) {
            have.erase(std::find(have.begin(), have.end(), v));
            NiceTreeDecomposition::Node node;
            node.kind = NiceKind::forget;
            node.vertex = v;
            node.bag = have;
            cur = link(cur, std::move(node));
        }
        for (int v : gain) {
            have.insert(std::lower_bound(have.begin(), have.end(), v), v);
            NiceTreeDecomposition::Node node;
            node.kind = NiceKind::introduce;
            node.vertex = v;
            node.bag = have;
            cur = link(cur, std::move(node));
        }
        return cur;
    }

    int build(int t) {
        const auto& bag = td.nodes[t].bag;
        const auto& children = td.nodes[t].children;
        if (children.empty()) return build_leaf_chain(bag);

        std::vector<int> tops;
        for (int c : children) tops.push_back(morph(build(c), td.nodes[c].bag, bag));
        while (tops.size() > 1) {
            NiceTreeDecomposition::Node node;
            node.kind = NiceKind::join;
            node.bag = bag;
            node.child = tops[tops.size() - 2];
            node.child2 = tops[tops.size() - 1];
            const int id = add(std::move(node));
            out.nodes[tops[tops.size() - 2]].parent = id;
            out.nodes[tops[tops.size() - 1]].parent = id;
            tops.pop_back();
            tops.back() = id;
        }
        return tops[0];
    }
};

} // namespace

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
    NiceBuilder builder{g, td, {}};
    builder.out.graph_n = g.n;
    builder.out.graph_m = g.m();

    int top = builder.build(0);
    top = builder.morph(top, builder.td.nodes[0].bag, {});
    builder.out.root = top;

    auto& nodes = builder.out.nodes;

    // Unique forget node per vertex, plus depths for edge placement.
    std::vector<int> forget_node(g.n, -1);
    std::vector<int> depth(nodes.size(), 0);
    {
        std::vector<int> stack{builder.out.root};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            if (nodes[t].kind == NiceKind::forget) {
                if (forget_node[nodes[t].vertex] >= 0)
                    throw validation_error("make_nice: vertex forgotten twice");
                forget_node[nodes[t].vertex] = t;
            }
            for (int c : {nodes[t].child, nodes[t].child2})
                if (c >= 0) {
                    depth[c] = depth[t] + 1;
                    stack.push_back(c);
                }
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (forget_node[v] < 0) throw validation_error("make_nice: vertex never forgotten");

    // Each edge goes directly below the deeper endpoint's forget node; that
    // bag is the top occurrence of the deeper endpoint and contains the other.
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        const int fu = forget_node[u], fv = forget_node[v];
        const int f = depth[fu] > depth[fv] ? fu : fv;
        NiceTreeDecomposition::Node node;
        node.kind = NiceKind::introduce_edge;
        node.edge_u = u;
        node.edge_v = v;
        node.edge_id = e;
        node.child = nodes[f].child;
        node.bag = nodes[node.child].bag;
        node.parent = f;
        const int id = static_cast<int>(nodes.size());
        nodes.push_back(std::move(node));
        nodes[nodes[id].child].parent = id;
        nodes[f].child = id;
    }

    // Children-before-parents order for the DP.
    auto& topo = builder.out.topo_order;
    topo.reserve(nodes.size());
    std::vector<std::pair<int, bool>> stack{{builder.out.root, false}};
    while (!stack.empty()) {
        auto [t, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            topo.push_back(t);
            continue;
        }
        stack.emplace_back(t, true);
        for (int c : {nodes[t].child, nodes[t].child2})
            if (c >= 0) stack.emplace_back(c, false);
    }
    return builder.out;
}

std::optional<DecompositionViolation> validate_nice(const Graph& g,
                                                    const NiceTreeDecomposition& ntd) {
    if (ntd.graph_n != g.n || ntd.graph_m != g.m())
        return DecompositionViolation{"edge-cover", "decomposition built for a different graph"};
    std::vector<int> edge_seen(g.m(), 0);
    for (const auto& node : ntd.nodes) {
        auto has = [&](int v) {
            return std::binary_search(node.bag.begin(), node.bag.end(), v);
        };
        switch (node.kind) {
            case NiceKind::leaf:
                if (!node.bag.empty())
                    return DecompositionViolation{"vertex-cover", "leaf bag not empty"};
                break;
            case NiceKind::introduce: {
                auto expect = ntd.nodes[node.child].bag;
                expect.insert(std::lower_bound(expect.begin(), expect.end(), node.vertex),
                              node.vertex);
                if (expect != node.bag)
                    return DecompositionViolation{"vertex-cover", "introduce bag mismatch"};
                break;
            }
            case NiceKind::forget: {
                auto expect = ntd.nodes[node.child].bag;
                expect.erase(std::find(expect.begin(), expect.end(), node.vertex));
                if (expect != node.bag)
                    return DecompositionViolation{"vertex-cover", "forget bag mismatch"};
                break;
            }
            case NiceKind::join:
                if (ntd.nodes[node.child].bag != node.bag ||
                    ntd.nodes[node.child2].bag != node.bag)
                    return DecompositionViolation{"vertex-cover", "join bag mismatch"};
                break;
            case NiceKind::introduce_edge:
                if (ntd.nodes[node.child].bag != node.bag)
                    return DecompositionViolation{"vertex-cover", "introduce-edge bag mismatch"};
                if (!has(node.edge_u) || !has(node.edge_v))
                    return DecompositionViolation{"edge-cover",
                                                  "introduce-edge bag misses an endpoint"};
                ++edge_seen[node.edge_id];
                break;
        }
    }
    for (int e = 0; e < g.m(); ++e)
        if (edge_seen[e] != 1)
            return DecompositionViolation{"edge-cover", "edge " + std::to_string(e) +
                                                            " introduced " +
                                                            std::to_string(edge_seen[e]) +
                                                            " times"};
    return std::nullopt;
}

int exact_treewidth(const Graph& g, int max_n) {
    if (g.n > max_n)
        throw instance_too_large("exact treewidth capped at " + std::to_string(max_n) +
                                 " vertices");
    if (g.n == 0) return -1;
    const int n = g.n;

    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }

    // deg_after(S, v): neighbors of v once S is eliminated, i.e. vertices
    // outside S reachable from v through S.
    auto deg_after = [&](std::uint32_t s, int v) {
        std::uint32_t seen = 1u << v;
        std::uint32_t frontier = nbr[v];
        std::uint32_t reach = 0;
        while (true) {
            reach |= frontier & ~s;
            std::uint32_t inside = frontier & s & ~seen;
            if (!inside) break;
            seen |= inside;
            std::uint32_t next = 0;
            std::uint32_t it = inside;
            while (it) {
                int w = std::countr_zero(it);
                it &= it - 1;
                next |= nbr[w];
            }
            frontier = next & ~seen;
        }
        reach &= ~(1u << v);
        return std::popcount(reach);
    };

    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint8_t> f(full + 1u, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = n;
        std::uint32_t it = s;
        while (it) {
            const int v = std::countr_zero(it);
            it &= it - 1;
            const std::uint32_t rest = s & ~(1u << v);
            best = std::min(best, std::max<int>(f[rest], deg_after(rest, v)));
        }
        f[s] = static_cast<std::uint8_t>(best);
    }
    return f[full];
}

} // namespace cdt
