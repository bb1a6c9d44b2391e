#pragma once

#include <cstdint>
#include <vector>

#include "cdt/candidate.hpp"
#include "cdt/contraction.hpp"
#include "cdt/graph.hpp"
#include "cdt/problem.hpp"
#include "cdt/treewidth.hpp"

namespace cdt {

struct DPStats {
    long long max_table = 0;       // most live configurations at any node
    double max_table_ratio = 0.0;  // max of |table| / states^|bag|
    bool table_bound_ok = true;
    int plain_states = 0;
};

struct DPResult {
    bool feasible = false;
    int cost = -1;
    std::vector<int> solution; // original vertex ids (oct/gfvs) or edge ids (eb/gfes)
    DPStats stats;
};

// Bottom-up contraction-friendly DP over a nice tree decomposition of the
// quotient G/X. Configurations assign a state to each plain super-vertex in a
// bag (oct: deleted/left/right, eb: left/right, gfvs: deleted or a group
// element, gfes: a group element) and an orbit index to each contracted one.
// Costs count deleted vertices at forget nodes and deleted edges at
// introduce-edge nodes, so each object is charged exactly once.
class ContractionDP {
  public:
    ContractionDP(const ProblemSpec& prob, const Graph& g, const ContractionMap& cm,
                  const std::vector<ComponentOrbit>& orbits, const NiceTreeDecomposition& ntd,
                  const CandidateSet& cand);

    // False when some contracted component admits no state at all, or every
    // root configuration was pruned.
    bool feasible() const { return feasible_; }
    int cost() const { return root_cost_; }
    const DPStats& stats() const { return stats_; }

    // Traceback from the root; throws no_feasible_entry when infeasible.
    std::vector<int> extract_solution() const;

  private:
    struct Key {
        std::uint64_t lo = 0, hi = 0;
        bool operator==(const Key&) const = default;
        bool operator<(const Key& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
    };
    struct Table {
        std::vector<Key> keys; // ascending
        std::vector<int> cost;
        std::vector<std::uint8_t> choice; // forgotten state, forget nodes only
        int find(const Key& k) const;
    };
    struct ProvEdge {
        bool x_on_first; // x lies in the super-vertex at pos_a
        std::uint8_t x_base = 0, y_base = 0;
        bool x_contracted = false, y_contracted = false;
        std::uint8_t label = 0; // group label of (x -> y)
        bool deletable = false;
        int orig_edge = -1;
    };

    static Key key_set(Key k, int pos, int val);
    static int key_get(const Key& k, int pos);

    int state_count(int quotient_vertex) const;
    // Decoded endpoint state; for contracted endpoints derived from the orbit.
    int endpoint_value(const ProvEdge& pe, bool x_side, int va, int vb) const;
    // Applies one provenance edge; returns false to prune, otherwise adds
    // any deletion cost.
    bool apply_edge(const ProvEdge& pe, int va, int vb, int& cost) const;

    void run();
    void record(int node, size_t entries);

    const ProblemSpec& prob_;
    const Graph& g_;
    const ContractionMap& cm_;
    const std::vector<ComponentOrbit>& orbits_;
    const NiceTreeDecomposition& ntd_;
    const CandidateSet& cand_;

    int plain_states_ = 0;
    std::vector<std::vector<ProvEdge>> prov_; // per nice node (introduce_edge only)
    std::vector<Table> tables_;
    bool feasible_ = false;
    int root_cost_ = -1;
    DPStats stats_;
};

// Runs the DP, extracts the witness and verifies it with the violation
// checker. The decomposition must belong to cm.quotient.
DPResult solve_on_td(const ProblemSpec& prob, const Graph& g, const ContractionMap& cm,
                     const NiceTreeDecomposition& ntd, const CandidateSet& cand);

} // namespace cdt
