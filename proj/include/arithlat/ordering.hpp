#pragma once

#include <string>
#include <vector>

#include "arithlat/errors.hpp"

namespace arithlat {

// Vertex labelling of an n x m product graph. Coordinates (i,j) are 1-based
// throughout: i is the row (1..n), j is the column (1..m).
//
//   row-wise:    (i,j) -> (i-1)*m + j
//   column-wise: (i,j) -> (j-1)*n + i
//
// Flattened indices in code are 0-based.
struct VertexOrdering {
    enum class Kind { row_wise, column_wise };

    Kind kind = Kind::row_wise;
    int rows = 1;
    int cols = 1;

    bool operator==(const VertexOrdering&) const = default;

    int size() const { return rows * cols; }

    int flatten(int i, int j) const {
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw DomainError("vertex coordinate out of range");
        return kind == Kind::row_wise ? (i - 1) * cols + (j - 1)
                                      : (j - 1) * rows + (i - 1);
    }

    std::pair<int, int> coords(int index) const {
        if (index < 0 || index >= size()) throw DomainError("vertex index out of range");
        if (kind == Kind::row_wise) return {index / cols + 1, index % cols + 1};
        return {index % rows + 1, index / rows + 1};
    }

    // Relabelling permutation p with p[new_index] = old_index, mapping this
    // ordering onto `target` over the same grid of vertices.
    std::vector<int> permutation_to(Kind target) const {
        VertexOrdering to{target, rows, cols};
        std::vector<int> p(static_cast<size_t>(size()));
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= cols; ++j)
                p[static_cast<size_t>(to.flatten(i, j))] = flatten(i, j);
        return p;
    }
};

inline std::string ordering_kind_name(VertexOrdering::Kind k) {
    return k == VertexOrdering::Kind::row_wise ? "row-wise" : "column-wise";
}

inline VertexOrdering::Kind ordering_kind_from_name(const std::string& s) {
    if (s == "row-wise" || s == "row") return VertexOrdering::Kind::row_wise;
    if (s == "column-wise" || s == "column" || s == "col") return VertexOrdering::Kind::column_wise;
    throw DomainError("unknown ordering: '" + s + "'");
}

} // namespace arithlat
