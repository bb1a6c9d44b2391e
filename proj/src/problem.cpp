#include "cdt/problem.hpp"

namespace cdt {

std::string problem_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::oct: return "oct";
        case ProblemKind::eb: return "eb";
        case ProblemKind::gfvs: return "gfvs";
        case ProblemKind::gfes: return "gfes";
    }
    return "?";
}

ProblemKind problem_from_name(const std::string& name) {
    if (name == "oct") return ProblemKind::oct;
    if (name == "eb") return ProblemKind::eb;
    if (name == "gfvs") return ProblemKind::gfvs;
    if (name == "gfes") return ProblemKind::gfes;
    throw parse_error("unknown problem: " + name);
}

GroupTable GroupTable::cyclic(int g) {
    if (g < 1) throw validation_error("group size must be >= 1");
    GroupTable t;
    t.size = g;
    t.mul.assign(g, std::vector<int>(g));
    t.inv.assign(g, 0);
    for (int a = 0; a < g; ++a) {
        for (int b = 0; b < g; ++b) t.mul[a][b] = (a + b) % g;
        t.inv[a] = (g - a) % g;
    }
    return t;
}

GroupTable GroupTable::from_table(std::vector<std::vector<int>> table) {
    GroupTable t;
    t.size = static_cast<int>(table.size());
    if (t.size < 1) throw validation_error("empty group table");
    t.mul = std::move(table);
    const int g = t.size;
    for (const auto& row : t.mul) {
        if (static_cast<int>(row.size()) != g) throw validation_error("group table is not square");
        for (int x : row)
            if (x < 0 || x >= g) throw validation_error("group table entry out of range");
    }
    for (int a = 0; a < g; ++a) {
        if (t.mul[0][a] != a || t.mul[a][0] != a)
            throw validation_error("group table: element 0 is not the identity");
    }
    t.inv.assign(g, -1);
    for (int a = 0; a < g; ++a) {
        for (int b = 0; b < g; ++b) {
            if (t.mul[a][b] == 0 && t.mul[b][a] == 0) {
                t.inv[a] = b;
                break;
            }
        }
        if (t.inv[a] < 0) throw validation_error("group table: missing inverse");
    }
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b)
            for (int c = 0; c < g; ++c)
                if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
                    throw validation_error("group table is not associative");
    return t;
}

int ProblemSpec::label_from(int edge_id, int from, int edge_u, int edge_v) const {
    (void)edge_v;
    const int lab = labels[edge_id];
    return from == edge_u ? lab : group.inverse(lab);
}

} // namespace cdt
