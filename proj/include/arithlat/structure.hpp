#pragma once

#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "arithlat/bigint.hpp"
#include "arithlat/graphs.hpp"

namespace arithlat {

// An arithmetical structure: positive integer vectors d, r with gcd(r)=1
// and (diag(d) - A) r = 0 for the graph's adjacency matrix A.
struct ArithStructure {
    GraphDesc graph;
    IntVec d;
    IntVec r;
    bool primitive = false;

    bool operator==(const ArithStructure&) const = default;
};

// Canonical order: lexicographic on r, ties broken by d.
inline bool lex_less(const ArithStructure& a, const ArithStructure& b) {
    if (a.r != b.r) return a.r < b.r;
    return a.d < b.d;
}

inline bool is_primitive(const IntVec& r) {
    if (r.empty()) throw DomainError("is_primitive: empty vector");
    return gcd_all(r) == 1;
}

enum class FailKind { none, equation, primitivity };

struct VerifyReport {
    bool passed = false;
    FailKind kind = FailKind::none;
    int vertex = -1; // first failing vertex (0-based) for equation failures
    Int lhs;         // d_v * r_v at the failing vertex
    Int rhs;         // sum of neighbor r-values there
};

// Domain errors (length mismatch, nonpositive entries) throw; mathematical
// failure (a falsified equation, non-primitive r) is reported, so harnesses
// can tell malformed input from refuted claims.
inline VerifyReport verify(const GraphDesc& g, const IntVec& d, const IntVec& r) {
    size_t v = static_cast<size_t>(g.vertex_count());
    if (d.size() != v || r.size() != v) throw DomainError("verify: vector length mismatch");
    if (!all_positive(d) || !all_positive(r)) throw DomainError("verify: entries must be positive");

    auto nb = neighbor_lists(g);
    for (size_t i = 0; i < v; ++i) {
        Int lhs = d[i] * r[i];
        Int rhs = 0;
        for (int u : nb[i]) rhs += r[static_cast<size_t>(u)];
        if (lhs != rhs) return {false, FailKind::equation, static_cast<int>(i), lhs, rhs};
    }
    if (gcd_all(r) != 1) return {false, FailKind::primitivity, -1, 0, 0};
    return {true, FailKind::none, -1, 0, 0};
}

inline VerifyReport verify(const ArithStructure& s) { return verify(s.graph, s.d, s.r); }

inline ArithStructure make_verified(GraphDesc g, IntVec d, IntVec r) {
    ArithStructure s{std::move(g), std::move(d), std::move(r), true};
    VerifyReport rep = verify(s);
    if (!rep.passed) throw DomainError("make_verified: structure does not verify on " + s.graph.label());
    return s;
}

// r = 1, d = degree vector. Always verifies on a connected graph.
inline ArithStructure laplacian_structure(const GraphDesc& g) {
    IntVec r(static_cast<size_t>(g.vertex_count()), Int(1));
    return ArithStructure{g, degree_vector(g), std::move(r), true};
}

struct DivisibilityResult {
    std::optional<IntVec> d;
    std::vector<int> failing_vertices; // where r_v does not divide the neighbor sum

    bool ok() const { return d.has_value(); }
};

// d_v = (sum of neighbor r-values) / r_v where every quotient is a positive
// integer; otherwise lists every offending vertex.
inline DivisibilityResult compute_d_from_r(const GraphDesc& g, const IntVec& r) {
    if (r.size() != static_cast<size_t>(g.vertex_count()))
        throw DomainError("compute_d_from_r: vector length mismatch");
    if (!all_positive(r)) throw DomainError("compute_d_from_r: r entries must be positive");

    auto nb = neighbor_lists(g);
    DivisibilityResult res;
    IntVec d(r.size());
    for (size_t i = 0; i < r.size(); ++i) {
        Int s = 0;
        for (int u : nb[i]) s += r[static_cast<size_t>(u)];
        if (s == 0 || s % r[i] != 0) {
            res.failing_vertices.push_back(static_cast<int>(i));
        } else {
            d[i] = s / r[i];
        }
    }
    if (res.failing_vertices.empty()) res.d = std::move(d);
    return res;
}

inline ExactMatrix structure_matrix(const GraphDesc& g, const IntVec& d) {
    if (d.size() != static_cast<size_t>(g.vertex_count()))
        throw DomainError("structure_matrix: vector length mismatch");
    ExactMatrix m = adjacency(g);
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) m.at(i, j) = (i == j ? d[static_cast<size_t>(i)] : -m.at(i, j));
    return m;
}

// Relabelling: (A, d, r) -> (P A P^T, Pd, Pr). Verification status is
// preserved for any bijection.
inline std::tuple<ExactMatrix, IntVec, IntVec> permute_structure(const ExactMatrix& a, const IntVec& d,
                                                                 const IntVec& r, std::span<const int> perm) {
    if (static_cast<int>(d.size()) != a.dim() || d.size() != r.size())
        throw DomainError("permute_structure: length mismatch");
    return {conjugate_by_permutation(a, perm), apply_permutation(perm, d), apply_permutation(perm, r)};
}

// Corner-pair trichotomy for ladder structures with r != 1. The printed
// cases overlap when one corner degree exceeds 3 and the other falls below,
// so classification is by priority: both equal 3 -> case 3, any above 3 ->
// case 1, otherwise case 2. Witness existence is reported, never assumed.
struct LadderCornerReport {
    int case_id = 0;           // 1, 2 or 3
    bool corner_above = false; // d(1,1) > 3 or d(2,1) > 3
    bool corner_below = false; // d(1,1) < 3 or d(2,1) < 3
    bool small_witness = false; // some vertex other than (1,1),(2,1) has d < 2
    bool large_witness = false; // some vertex other than (1,1),(2,1) has d > 2
};

inline LadderCornerReport classify_ladder_corners(const ArithStructure& s) {
    if (s.graph.family != Family::ladder) throw DomainError("classify_ladder_corners: ladder structures only");
    bool all_ones = true;
    for (const Int& x : s.r)
        if (x != 1) { all_ones = false; break; }
    if (all_ones) throw DomainError("classify_ladder_corners: r is the all-ones vector");

    VertexOrdering ord = s.graph.grid_ordering();
    size_t c11 = static_cast<size_t>(ord.flatten(1, 1));
    size_t c21 = static_cast<size_t>(ord.flatten(2, 1));
    LadderCornerReport rep;
    rep.corner_above = s.d[c11] > 3 || s.d[c21] > 3;
    rep.corner_below = s.d[c11] < 3 || s.d[c21] < 3;
    if (s.d[c11] == 3 && s.d[c21] == 3)
        rep.case_id = 3;
    else
        rep.case_id = rep.corner_above ? 1 : 2;
    for (size_t i = 0; i < s.d.size(); ++i) {
        if (i == c11 || i == c21) continue;
        if (s.d[i] < 2) rep.small_witness = true;
        if (s.d[i] > 2) rep.large_witness = true;
    }
    return rep;
}

} // namespace arithlat
