#pragma once

#include <string>
#include <vector>

#include "arithlat/matrix.hpp"
#include "arithlat/ordering.hpp"

namespace arithlat {

enum class Family { path, cycle, ladder, grid };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::ladder: return "ladder";
        case Family::grid: return "grid";
    }
    throw DomainError("bad family");
}

inline Family family_from_name(const std::string& s) {
    if (s == "path") return Family::path;
    if (s == "cycle") return Family::cycle;
    if (s == "ladder") return Family::ladder;
    if (s == "grid") return Family::grid;
    throw DomainError("unknown graph family: '" + s + "'");
}

// One of the four supported graph families together with its vertex
// labelling. Ladders are n=2 grids kept as their own family to match the
// usual naming; orderings matter only for ladders and grids.
struct GraphDesc {
    Family family = Family::path;
    int n = 1; // path/cycle length, grid rows (ladder rows are fixed at 2)
    int m = 1; // ladder/grid columns
    VertexOrdering::Kind ordering = VertexOrdering::Kind::row_wise;

    bool operator==(const GraphDesc&) const = default;

    static GraphDesc path(int n) {
        if (n < 1) throw DomainError("path needs at least one vertex");
        return {Family::path, n, 1, VertexOrdering::Kind::row_wise};
    }
    static GraphDesc cycle(int n) {
        if (n < 3) throw DomainError("cycle needs at least three vertices");
        return {Family::cycle, n, 1, VertexOrdering::Kind::row_wise};
    }
    static GraphDesc ladder(int m, VertexOrdering::Kind k = VertexOrdering::Kind::row_wise) {
        if (m < 1) throw DomainError("ladder needs at least one column");
        return {Family::ladder, 2, m, k};
    }
    static GraphDesc grid(int n, int m, VertexOrdering::Kind k = VertexOrdering::Kind::row_wise) {
        if (n < 1 || m < 1) throw DomainError("grid needs positive dimensions");
        return {Family::grid, n, m, k};
    }

    int vertex_count() const {
        switch (family) {
            case Family::path:
            case Family::cycle: return n;
            case Family::ladder: return 2 * m;
            case Family::grid: return n * m;
        }
        throw DomainError("bad family");
    }

    bool is_product() const { return family == Family::ladder || family == Family::grid; }

    VertexOrdering grid_ordering() const {
        if (!is_product()) throw DomainError("ordering applies to ladder/grid only");
        return {ordering, family == Family::ladder ? 2 : n, m};
    }

    std::string label() const {
        switch (family) {
            case Family::path: return "path n=" + std::to_string(n);
            case Family::cycle: return "cycle n=" + std::to_string(n);
            case Family::ladder: return "ladder m=" + std::to_string(m);
            case Family::grid: return "grid " + std::to_string(n) + "x" + std::to_string(m);
        }
        throw DomainError("bad family");
    }
};

inline ExactMatrix path_adjacency(int n) {
    if (n < 1) throw DomainError("path_adjacency: n must be >= 1");
    ExactMatrix a(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        a.at(i, i + 1) = 1;
        a.at(i + 1, i) = 1;
    }
    return a;
}

inline ExactMatrix cycle_adjacency(int n) {
    if (n < 3) throw DomainError("cycle_adjacency: n must be >= 3");
    ExactMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        a.at(i, (i + 1) % n) = 1;
        a.at((i + 1) % n, i) = 1;
    }
    return a;
}

// A_G (x) I + I (x) A_H, labelled row-wise: vertex (i,j) of the product sits
// at index (i-1)*dim(A_H) + (j-1).
inline ExactMatrix cartesian_adjacency(const ExactMatrix& ag, const ExactMatrix& ah) {
    int n = ag.dim();
    int m = ah.dim();
    ExactMatrix a = kronecker_product(ag, ExactMatrix::identity(m)) +
                    kronecker_product(ExactMatrix::identity(n), ah);
    a.ordering = VertexOrdering{VertexOrdering::Kind::row_wise, n, m};
    return a;
}

inline ExactMatrix grid_adjacency(int n, int m, VertexOrdering::Kind kind) {
    if (n < 1 || m < 1) throw DomainError("grid_adjacency: dimensions must be >= 1");
    ExactMatrix a = cartesian_adjacency(path_adjacency(n), path_adjacency(m));
    if (kind != VertexOrdering::Kind::row_wise) {
        VertexOrdering row{VertexOrdering::Kind::row_wise, n, m};
        a = conjugate_by_permutation(a, row.permutation_to(kind));
    }
    a.ordering = VertexOrdering{kind, n, m};
    return a;
}

inline ExactMatrix ladder_adjacency(int m, VertexOrdering::Kind kind) {
    return grid_adjacency(2, m, kind);
}

inline ExactMatrix adjacency(const GraphDesc& g) {
    switch (g.family) {
        case Family::path: return path_adjacency(g.n);
        case Family::cycle: return cycle_adjacency(g.n);
        case Family::ladder: return ladder_adjacency(g.m, g.ordering);
        case Family::grid: return grid_adjacency(g.n, g.m, g.ordering);
    }
    throw DomainError("bad family");
}

// Neighbor lists under the declared labelling; built directly from the
// coordinates so the oracle and verifier do not pay for matrix scans.
inline std::vector<std::vector<int>> neighbor_lists(const GraphDesc& g) {
    std::vector<std::vector<int>> nb(static_cast<size_t>(g.vertex_count()));
    switch (g.family) {
        case Family::path:
            for (int i = 0; i < g.n; ++i) {
                if (i > 0) nb[static_cast<size_t>(i)].push_back(i - 1);
                if (i + 1 < g.n) nb[static_cast<size_t>(i)].push_back(i + 1);
            }
            break;
        case Family::cycle:
            for (int i = 0; i < g.n; ++i) {
                nb[static_cast<size_t>(i)].push_back((i + g.n - 1) % g.n);
                nb[static_cast<size_t>(i)].push_back((i + 1) % g.n);
            }
            break;
        case Family::ladder:
        case Family::grid: {
            VertexOrdering ord = g.grid_ordering();
            for (int i = 1; i <= ord.rows; ++i)
                for (int j = 1; j <= ord.cols; ++j) {
                    auto& out = nb[static_cast<size_t>(ord.flatten(i, j))];
                    if (i > 1) out.push_back(ord.flatten(i - 1, j));
                    if (i < ord.rows) out.push_back(ord.flatten(i + 1, j));
                    if (j > 1) out.push_back(ord.flatten(i, j - 1));
                    if (j < ord.cols) out.push_back(ord.flatten(i, j + 1));
                }
            break;
        }
    }
    return nb;
}

inline IntVec degree_vector(const GraphDesc& g) {
    auto nb = neighbor_lists(g);
    IntVec d;
    d.reserve(nb.size());
    for (const auto& ns : nb) d.emplace_back(static_cast<long>(ns.size()));
    return d;
}

// Column-wise block form of A(P2 [] Pm):
//
//   [ A(P2 [] P_{m-1})  B_{m-1} ]
//   [ B_{m-1}^T         A(P2)   ]
//
// where B_{m-1} is zero except its last two rows, which form I2.
struct LadderBlocks {
    ExactMatrix upper_left; // 2(m-1) x 2(m-1)
    ExactMatrix bridge;     // 2(m-1) x 2
    ExactMatrix lower_right; // 2 x 2
};

inline LadderBlocks ladder_block_decompose(int m) {
    if (m < 2) throw DomainError("ladder_block_decompose: m must be >= 2");
    LadderBlocks b{ladder_adjacency(m - 1, VertexOrdering::Kind::column_wise),
                   ExactMatrix(2 * (m - 1), 2), path_adjacency(2)};
    b.bridge.at(2 * (m - 1) - 2, 0) = 1;
    b.bridge.at(2 * (m - 1) - 1, 1) = 1;
    return b;
}

inline ExactMatrix reassemble(const LadderBlocks& b) {
    int k = b.upper_left.dim();
    ExactMatrix a(k + 2, k + 2);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a.at(i, j) = b.upper_left.at(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 2; ++j) {
            a.at(i, k + j) = b.bridge.at(i, j);
            a.at(k + j, i) = b.bridge.at(i, j);
        }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a.at(k + i, k + j) = b.lower_right.at(i, j);
    a.ordering = VertexOrdering{VertexOrdering::Kind::column_wise, 2, k / 2 + 1};
    return a;
}

} // namespace arithlat
