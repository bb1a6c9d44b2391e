#pragma once

#include <string>
#include <vector>

#include "cdt/errors.hpp"

namespace cdt {

enum class ProblemKind { oct, eb, gfvs, gfes };

inline bool is_vertex_problem(ProblemKind k) {
    return k == ProblemKind::oct || k == ProblemKind::gfvs;
}
inline bool is_group_problem(ProblemKind k) {
    return k == ProblemKind::gfvs || k == ProblemKind::gfes;
}

std::string problem_name(ProblemKind k);
ProblemKind problem_from_name(const std::string& name);

// Finite group given as an explicit multiplication table. Element 0 is the
// identity; inv is derived and checked at construction.
struct GroupTable {
    int size = 1;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;

    static GroupTable cyclic(int g);
    static GroupTable from_table(std::vector<std::vector<int>> table);

    int multiply(int a, int b) const { return mul[a][b]; }
    int inverse(int a) const { return inv[a]; }
};

// Problem instance descriptor. For gfvs/gfes, labels[e] is the label of the
// directed edge (u,v) where edges[e] = (u,v) with u < v; the reverse direction
// carries the inverse.
struct ProblemSpec {
    ProblemKind kind = ProblemKind::oct;
    GroupTable group;
    std::vector<int> labels;

    static ProblemSpec make_oct() { return {ProblemKind::oct, GroupTable::cyclic(2), {}}; }
    static ProblemSpec make_eb() { return {ProblemKind::eb, GroupTable::cyclic(2), {}}; }
    static ProblemSpec make_gfvs(GroupTable g, std::vector<int> labels) {
        return {ProblemKind::gfvs, std::move(g), std::move(labels)};
    }
    static ProblemSpec make_gfes(GroupTable g, std::vector<int> labels) {
        return {ProblemKind::gfes, std::move(g), std::move(labels)};
    }

    // Label of the edge with id e traversed from u; requires labels to be
    // sized to the edge count for group problems.
    int label_from(int edge_id, int from, int edge_u, int edge_v) const;
};

} // namespace cdt
