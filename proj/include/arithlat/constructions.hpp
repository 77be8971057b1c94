#pragma once

#include <optional>
#include <vector>

#include "arithlat/structure.hpp"

namespace arithlat {

// Every builder re-verifies its output and refuses to return an unverified
// structure. Unconditional constructions throw std::logic_error if their
// output ever fails (that would be a bug); conditional ones report failure
// through their result type so a falsified side-condition is a finding, not
// a crash.

namespace detail {

inline void require_verified(const ArithStructure& s, const char* who) {
    if (!verify(s).passed) throw DomainError(std::string(who) + ": input structure does not verify");
}

inline ArithStructure checked_output(GraphDesc g, IntVec d, IntVec r, const char* who) {
    ArithStructure s{std::move(g), std::move(d), std::move(r), true};
    if (!verify(s).passed) throw std::logic_error(std::string(who) + ": constructed output failed verification");
    return s;
}

// Row i of the factor Pn contributes its vertical degree to every d in that
// row: 0 when n = 1, otherwise 1 at the outer rows and 2 inside.
inline long vertical_contribution(int i, int n) {
    if (n == 1) return 0;
    return (i == 1 || i == n) ? 1 : 2;
}

inline GraphDesc product_of_paths(int n, int m, VertexOrdering::Kind k) {
    if (n == 1) return GraphDesc::path(m);
    if (n == 2) return GraphDesc::ladder(m, k);
    return GraphDesc::grid(n, m, k);
}

} // namespace detail

// Doubling a path structure: r = (r1, r1), d = (d1 + 1, d1 + 1) on the
// row-wise ladder. Unconditional.
inline ArithStructure stack_symmetric(const ArithStructure& ps) {
    if (ps.graph.family != Family::path) throw DomainError("stack_symmetric: path input required");
    detail::require_verified(ps, "stack_symmetric");
    int m = ps.graph.n;
    IntVec r, d;
    r.reserve(2 * ps.r.size());
    d.reserve(2 * ps.d.size());
    for (int copy = 0; copy < 2; ++copy) {
        for (const Int& x : ps.r) r.push_back(x);
        for (const Int& x : ps.d) d.push_back(x + 1);
    }
    return detail::checked_output(GraphDesc::ladder(m, VertexOrdering::Kind::row_wise), std::move(d),
                                  std::move(r), "stack_symmetric");
}

enum class BuildOutcome { ok, positivity_failure, divisibility_failure, primitivity_failure };

struct BuildResult {
    BuildOutcome outcome = BuildOutcome::ok;
    std::optional<ArithStructure> structure;
    std::vector<int> offending; // output vertex indices where the failure sits

    bool ok() const { return outcome == BuildOutcome::ok; }
};

// Second stacking rule: r2 := (diag(d1 + k) - A(Pm)) r1, accepted when r2 is
// strictly positive and divides A(Pm) r2 + r1 entrywise; then
// d = (d1 + k, d2) with d2 the quotients. Offsets k = 1 reproduce the
// symmetric stack, k = 0 collapses r2 to zero.
inline BuildResult stack_with_offset(const ArithStructure& ps, const IntVec& k) {
    if (ps.graph.family != Family::path) throw DomainError("stack_with_offset: path input required");
    detail::require_verified(ps, "stack_with_offset");
    int m = ps.graph.n;
    if (static_cast<int>(k.size()) != m) throw DomainError("stack_with_offset: offset length mismatch");
    for (const Int& x : k)
        if (x < 0) throw DomainError("stack_with_offset: offsets must be non-negative");

    ExactMatrix a = path_adjacency(m);
    IntVec d1k(ps.d.size());
    for (size_t i = 0; i < d1k.size(); ++i) d1k[i] = ps.d[i] + k[i];

    IntVec r2 = structure_matrix(GraphDesc::path(m), d1k) * ps.r;

    BuildResult res;
    for (size_t i = 0; i < r2.size(); ++i)
        if (r2[i] <= 0) res.offending.push_back(m + static_cast<int>(i));
    if (!res.offending.empty()) {
        res.outcome = BuildOutcome::positivity_failure;
        return res;
    }

    IntVec need = a * r2;
    IntVec d2(r2.size());
    for (size_t i = 0; i < r2.size(); ++i) {
        Int sum = need[i] + ps.r[i];
        if (sum % r2[i] != 0) {
            res.offending.push_back(m + static_cast<int>(i));
            continue;
        }
        d2[i] = sum / r2[i];
    }
    if (!res.offending.empty()) {
        res.outcome = BuildOutcome::divisibility_failure;
        return res;
    }

    IntVec r = ps.r;
    r.insert(r.end(), r2.begin(), r2.end());
    if (gcd_all(r) != 1) {
        res.outcome = BuildOutcome::primitivity_failure;
        return res;
    }
    IntVec d = d1k;
    d.insert(d.end(), d2.begin(), d2.end());
    res.structure = detail::checked_output(GraphDesc::ladder(m, VertexOrdering::Kind::row_wise),
                                           std::move(d), std::move(r), "stack_with_offset");
    return res;
}

// Product structure: r = x (x) y, d(i,j) = d^G_i + d^H_j on the row-wise
// product of two path structures. Primitivity is inherited from the
// factors. Unconditional.
inline ArithStructure kronecker_structure(const ArithStructure& sg, const ArithStructure& sh) {
    if (sg.graph.family != Family::path || sh.graph.family != Family::path)
        throw DomainError("kronecker_structure: unsupported family pair (path factors only)");
    detail::require_verified(sg, "kronecker_structure");
    detail::require_verified(sh, "kronecker_structure");
    int n = sg.graph.n;
    int m = sh.graph.n;
    IntVec r, d;
    r.reserve(static_cast<size_t>(n) * m);
    d.reserve(static_cast<size_t>(n) * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            r.push_back(sg.r[static_cast<size_t>(i)] * sh.r[static_cast<size_t>(j)]);
            d.push_back(sg.d[static_cast<size_t>(i)] + sh.d[static_cast<size_t>(j)]);
        }
    return detail::checked_output(detail::product_of_paths(n, m, VertexOrdering::Kind::row_wise),
                                  std::move(d), std::move(r), "kronecker_structure");
}

enum class ExtensionMode { ones_ones, rij_one, one_rij, free_y };

inline std::string extension_mode_name(ExtensionMode m) {
    switch (m) {
        case ExtensionMode::ones_ones: return "ones-ones";
        case ExtensionMode::rij_one: return "rij-one";
        case ExtensionMode::one_rij: return "one-rij";
        case ExtensionMode::free_y: return "free-y";
    }
    throw DomainError("bad extension mode");
}

inline ExtensionMode extension_mode_from_name(const std::string& s) {
    if (s == "ones-ones") return ExtensionMode::ones_ones;
    if (s == "rij-one") return ExtensionMode::rij_one;
    if (s == "one-rij") return ExtensionMode::one_rij;
    if (s == "free-y") return ExtensionMode::free_y;
    throw DomainError("unknown extension mode: '" + s + "'");
}

struct ColumnExtensionSpec {
    ExtensionMode mode = ExtensionMode::ones_ones;
    std::optional<std::pair<int, int>> source_index; // 1-based (i,j) into the source ladder
    std::optional<std::pair<Int, Int>> y;
};

struct ExtendResult {
    BuildOutcome outcome = BuildOutcome::ok;
    std::optional<ArithStructure> structure;
    std::vector<int> offending;        // column-wise output vertex indices
    bool hypotheses_satisfied = false; // the matching theorem's stated divisibility conditions

    bool ok() const { return outcome == BuildOutcome::ok; }
};

// Appends one column to a column-wise ladder structure. The appended pair
// per mode:
//
//   ones-ones: (1, 1)        rij-one: (r_{i,j}, 1)
//   one-rij:   (1, r_{i,j})  free-y:  (y1, y2)
//
// d is recomputed for every vertex from scratch instead of trusting the
// displayed formulas; hypotheses_satisfied records whether the stated
// side-conditions held, so condition-holds-but-output-fails instances
// surface as findings.
inline ExtendResult extend_column(const ArithStructure& ls, const ColumnExtensionSpec& spec) {
    if (ls.graph.family != Family::ladder || ls.graph.ordering != VertexOrdering::Kind::column_wise)
        throw DomainError("extend_column: column-wise ladder input required");
    detail::require_verified(ls, "extend_column");
    int m_old = ls.graph.m;
    VertexOrdering ord = ls.graph.grid_ordering();
    auto rv = [&](int i, int j) -> Int { // boundary convention: column 0 reads as 0
        return j < 1 ? Int(0) : ls.r[static_cast<size_t>(ord.flatten(i, j))];
    };

    Int top, bottom;
    switch (spec.mode) {
        case ExtensionMode::ones_ones:
            top = 1;
            bottom = 1;
            break;
        case ExtensionMode::rij_one:
        case ExtensionMode::one_rij: {
            if (!spec.source_index) throw DomainError("extend_column: source_index required for this mode");
            auto [i, j] = *spec.source_index;
            if (i < 1 || i > 2 || j < 1 || j > m_old)
                throw DomainError("extend_column: source_index outside the source ladder");
            Int val = rv(i, j);
            top = spec.mode == ExtensionMode::rij_one ? val : Int(1);
            bottom = spec.mode == ExtensionMode::rij_one ? Int(1) : val;
            break;
        }
        case ExtensionMode::free_y:
            if (!spec.y) throw DomainError("extend_column: y required for free-y mode");
            top = spec.y->first;
            bottom = spec.y->second;
            if (top < 1 || bottom < 1) throw DomainError("extend_column: y must be positive");
            break;
    }

    // Stated hypotheses of the matching theorem.
    Int r1m = rv(1, m_old), r2m = rv(2, m_old);
    Int r1p = rv(1, m_old - 1), r2p = rv(2, m_old - 1);
    bool hyp = false;
    switch (spec.mode) {
        case ExtensionMode::ones_ones:
            hyp = (1 + r2m + r1p) % r1m == 0 && (1 + r1m + r2p) % r2m == 0;
            break;
        case ExtensionMode::rij_one:
            hyp = (r1p + r2m + top) % r1m == 0 && (r2p + r1m + 1) % r2m == 0 && (r1m + 1) % top == 0;
            break;
        case ExtensionMode::one_rij:
            hyp = (r1p + r2m + 1) % r1m == 0 && (r2p + r1m + bottom) % r2m == 0 && (r2m + 1) % bottom == 0;
            break;
        case ExtensionMode::free_y:
            hyp = (r1m + bottom) % top == 0 && (r2m + top) % bottom == 0;
            break;
    }

    GraphDesc g = GraphDesc::ladder(m_old + 1, VertexOrdering::Kind::column_wise);
    IntVec r = ls.r;
    r.push_back(top);
    r.push_back(bottom);

    ExtendResult res;
    res.hypotheses_satisfied = hyp;
    DivisibilityResult div = compute_d_from_r(g, r);
    if (!div.ok()) {
        res.outcome = BuildOutcome::divisibility_failure;
        res.offending = div.failing_vertices;
        return res;
    }
    if (gcd_all(r) != 1) {
        res.outcome = BuildOutcome::primitivity_failure;
        return res;
    }
    res.structure = detail::checked_output(g, std::move(*div.d), std::move(r), "extend_column");
    return res;
}

// All (y1, y2) with entries <= cap whose free-y extension succeeds. The
// recursion theorem quantifies over all valid pairs without a bound, so the
// search range is the caller's choice.
inline std::vector<std::pair<Int, Int>> search_extension_y(const ArithStructure& ls, const Int& cap = 16) {
    if (cap < 1) throw DomainError("search_extension_y: cap must be >= 1");
    std::vector<std::pair<Int, Int>> found;
    for (Int y1 = 1; y1 <= cap; ++y1)
        for (Int y2 = 1; y2 <= cap; ++y2) {
            ColumnExtensionSpec spec{ExtensionMode::free_y, std::nullopt, std::make_pair(y1, y2)};
            if (extend_column(ls, spec).ok()) found.emplace_back(y1, y2);
        }
    return found;
}

// Row sequences a (top) and b (bottom) with the boundary convention
// a_0 = b_0 = a_{m+1} = b_{m+1} = 0 and the divisibility invariants
//
//   a_i | (a_{i-1} + a_{i+1} + b_i),   b_i | (b_{i-1} + b_{i+1} + a_i).
struct NonSymSequences {
    IntVec a;
    IntVec b;
};

struct NonSymResult {
    ArithStructure structure;
    bool symmetric = false; // a == b
};

inline NonSymResult build_nonsymmetric(const NonSymSequences& seqs) {
    size_t m = seqs.a.size();
    if (m == 0 || seqs.b.size() != m) throw DomainError("build_nonsymmetric: sequences empty or ragged");
    if (!all_positive(seqs.a) || !all_positive(seqs.b))
        throw DomainError("build_nonsymmetric: sequence entries must be positive");

    auto at = [](const IntVec& v, size_t i) -> Int { // 1-based with zero boundary
        return (i < 1 || i > v.size()) ? Int(0) : v[i - 1];
    };
    IntVec d1(m), d2(m);
    for (size_t i = 1; i <= m; ++i) {
        Int top_sum = at(seqs.a, i - 1) + at(seqs.a, i + 1) + at(seqs.b, i);
        Int bot_sum = at(seqs.b, i - 1) + at(seqs.b, i + 1) + at(seqs.a, i);
        if (top_sum % at(seqs.a, i) != 0)
            throw DomainError("build_nonsymmetric: divisibility fails at i=" + std::to_string(i) + ", top row");
        if (bot_sum % at(seqs.b, i) != 0)
            throw DomainError("build_nonsymmetric: divisibility fails at i=" + std::to_string(i) + ", bottom row");
        d1[i - 1] = top_sum / at(seqs.a, i);
        d2[i - 1] = bot_sum / at(seqs.b, i);
    }

    IntVec r = seqs.a;
    r.insert(r.end(), seqs.b.begin(), seqs.b.end());
    if (gcd_all(r) != 1) throw DomainError("build_nonsymmetric: combined vector is not primitive");
    IntVec d = std::move(d1);
    d.insert(d.end(), d2.begin(), d2.end());

    NonSymResult res{detail::checked_output(GraphDesc::ladder(static_cast<int>(m), VertexOrdering::Kind::row_wise),
                                            std::move(d), std::move(r), "build_nonsymmetric"),
                     seqs.a == seqs.b};
    res.symmetric = seqs.a == seqs.b;
    return res;
}

struct ShiftedSymmetricReport {
    bool holds = false;          // both block equations hold exactly
    bool first_constant = false; // (D1 - A - I) r1 is a constant vector
    std::optional<Int> determined_k; // that constant, when it exists
    int witness = -1;            // first index violating an equation (or constancy)
};

// Shift construction r = (r1, r1 + k*1): holds iff
//   (D1 - A(Pm) - I) r1 = k 1   and   (D2 - A(Pm)) (r1 + k 1) = r1.
// When the first expression is constant, that constant is the only possible
// k, and it is reported whether or not the equations hold for the given k.
inline ShiftedSymmetricReport shifted_symmetric_check(const IntVec& r1, const IntVec& diag1,
                                                      const IntVec& diag2, const Int& k) {
    size_t m = r1.size();
    if (m == 0 || diag1.size() != m || diag2.size() != m)
        throw DomainError("shifted_symmetric_check: length mismatch");
    if (!all_positive(r1) || !all_positive(diag1) || !all_positive(diag2))
        throw DomainError("shifted_symmetric_check: entries must be positive");
    if (k < 0) throw DomainError("shifted_symmetric_check: k must be non-negative");

    ExactMatrix a = path_adjacency(static_cast<int>(m));
    IntVec ar1 = a * r1;
    ShiftedSymmetricReport rep;

    IntVec first(m);
    for (size_t i = 0; i < m; ++i) first[i] = diag1[i] * r1[i] - ar1[i] - r1[i];
    rep.first_constant = true;
    for (size_t i = 1; i < m; ++i)
        if (first[i] != first[0]) {
            rep.first_constant = false;
            rep.witness = static_cast<int>(i);
            break;
        }
    if (rep.first_constant) rep.determined_k = first[0];

    IntVec r2(m);
    for (size_t i = 0; i < m; ++i) r2[i] = r1[i] + k;
    IntVec ar2 = a * r2;
    rep.holds = true;
    for (size_t i = 0; i < m; ++i) {
        bool eq1 = first[i] == k;
        bool eq2 = diag2[i] * r2[i] - ar2[i] == r1[i];
        if (!eq1 || !eq2) {
            rep.holds = false;
            if (rep.witness < 0) rep.witness = static_cast<int>(i);
            break;
        }
    }
    return rep;
}

// Inverse of stack_symmetric: x_i = r(1,i), d'_i = d(1,i) - 1 on Pm.
inline ArithStructure symmetric_to_path(const ArithStructure& ls) {
    if (ls.graph.family != Family::ladder) throw DomainError("symmetric_to_path: ladder input required");
    detail::require_verified(ls, "symmetric_to_path");
    VertexOrdering ord = ls.graph.grid_ordering();
    int m = ord.cols;
    IntVec x(static_cast<size_t>(m)), d(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) {
        size_t top = static_cast<size_t>(ord.flatten(1, j));
        size_t bot = static_cast<size_t>(ord.flatten(2, j));
        if (ls.r[top] != ls.r[bot]) throw DomainError("symmetric_to_path: structure is not row-symmetric");
        x[static_cast<size_t>(j - 1)] = ls.r[top];
        if (ls.d[top] <= 1)
            throw std::logic_error("symmetric_to_path: d(1,i) = 1 would leave no path degree");
        d[static_cast<size_t>(j - 1)] = ls.d[top] - 1;
    }
    return detail::checked_output(GraphDesc::path(m), std::move(d), std::move(x), "symmetric_to_path");
}

// Column-constant lift of a path structure to the n x m grid:
// r(i,j) = r_j and d(i,j) = (r_{j-1} + r_{j+1})/r_j + c_i with c_i the
// vertical degree of row i. Unconditional: the path structure supplies the
// divisibility.
inline ArithStructure grid_column_constant(const ArithStructure& ps, int n) {
    if (ps.graph.family != Family::path) throw DomainError("grid_column_constant: path input required");
    if (n < 1) throw DomainError("grid_column_constant: n must be >= 1");
    detail::require_verified(ps, "grid_column_constant");
    int m = ps.graph.n;

    IntVec horizontal(static_cast<size_t>(m)); // (r_{j-1} + r_{j+1}) / r_j
    for (int j = 0; j < m; ++j) {
        Int sum = 0;
        if (j > 0) sum += ps.r[static_cast<size_t>(j - 1)];
        if (j + 1 < m) sum += ps.r[static_cast<size_t>(j + 1)];
        horizontal[static_cast<size_t>(j)] = sum / ps.r[static_cast<size_t>(j)];
    }

    IntVec r, d;
    r.reserve(static_cast<size_t>(n) * m);
    d.reserve(static_cast<size_t>(n) * m);
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < m; ++j) {
            r.push_back(ps.r[static_cast<size_t>(j)]);
            d.push_back(horizontal[static_cast<size_t>(j)] + detail::vertical_contribution(i, n));
        }
    return detail::checked_output(detail::product_of_paths(n, m, VertexOrdering::Kind::row_wise),
                                  std::move(d), std::move(r), "grid_column_constant");
}

struct DeltaReport {
    bool holds = false;
    IntVec delta; // a_i - b_i per column
};

// Per-column identity d_{1,i} a_i - d_{2,i} b_i = delta_{i-1} + delta_{i+1}
// - delta_i (boundary deltas are 0). Implied by the vertex equations, so it
// holds for every verified ladder structure; the delta sequence is returned
// for inspection.
inline DeltaReport delta_identity_check(const ArithStructure& ls) {
    if (ls.graph.family != Family::ladder) throw DomainError("delta_identity_check: ladder input required");
    detail::require_verified(ls, "delta_identity_check");
    VertexOrdering ord = ls.graph.grid_ordering();
    int m = ord.cols;

    DeltaReport rep;
    rep.delta.resize(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j)
        rep.delta[static_cast<size_t>(j - 1)] =
            ls.r[static_cast<size_t>(ord.flatten(1, j))] - ls.r[static_cast<size_t>(ord.flatten(2, j))];

    rep.holds = true;
    for (int j = 1; j <= m; ++j) {
        size_t top = static_cast<size_t>(ord.flatten(1, j));
        size_t bot = static_cast<size_t>(ord.flatten(2, j));
        Int lhs = ls.d[top] * ls.r[top] - ls.d[bot] * ls.r[bot];
        Int rhs = -rep.delta[static_cast<size_t>(j - 1)];
        if (j > 1) rhs += rep.delta[static_cast<size_t>(j - 2)];
        if (j < m) rhs += rep.delta[static_cast<size_t>(j)];
        if (lhs != rhs) {
            rep.holds = false;
            break;
        }
    }
    return rep;
}

} // namespace arithlat
