#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "arithlat/oracle.hpp"
#include "arithlat/structure.hpp"

namespace arithlat {

// One column of a ladder/grid structure: a primitive tuple of positive
// integers, one value per row.
struct ColumnState {
    IntVec values;

    auto operator<=>(const ColumnState&) const = default;
    int size() const { return static_cast<int>(values.size()); }
};

inline ColumnState column_state(std::initializer_list<long> xs) { return ColumnState{int_vec(xs)}; }

// Two columns u, v are admissible as consecutive columns iff they extend to
// an arithmetical structure on Pn [] P2, i.e. all 2n vertex divisibility
// conditions hold (boundary convention: values above row 1 and below row n
// are 0). For n = 2 with u = (a,b), v = (c,d) this is exactly
//
//   a | (b+c),  b | (a+d),  c | (a+d),  d | (b+c).
//
// The condition set is invariant under swapping u and v, so admissibility
// is a symmetric relation and every transition matrix below equals its
// transpose.
inline bool admissible(const ColumnState& s, const ColumnState& t) {
    int n = s.size();
    if (n != t.size()) throw DomainError("admissible: state sizes differ");
    if (n < 1) throw DomainError("admissible: empty state");
    if (!all_positive(s.values) || !all_positive(t.values))
        throw DomainError("admissible: state values must be positive");
    auto cond = [&](const IntVec& u, const IntVec& v) {
        for (int k = 0; k < n; ++k) {
            Int sum = v[static_cast<size_t>(k)];
            if (k > 0) sum += u[static_cast<size_t>(k - 1)];
            if (k + 1 < n) sum += u[static_cast<size_t>(k + 1)];
            if (sum % u[static_cast<size_t>(k)] != 0) return false;
        }
        return true;
    };
    return cond(s.values, t.values) && cond(t.values, s.values);
}

inline constexpr long kC4BoundCap = 64;

// All primitive positive solutions of the C4 system with entries <= bound,
// in the cyclic vertex order (a, c, d, b) that matches columns (a,b) and
// (c,d) of a two-column band:
//
//   d1 a = b + c,  d2 c = a + d,  d3 d = b + c,  d4 b = a + d.
inline std::vector<ArithStructure> enumerate_c4(const Int& bound) {
    if (bound < 1) throw DomainError("enumerate_c4: bound must be >= 1");
    if (bound > kC4BoundCap) throw SizeCapError("enumerate_c4: bound exceeds cap");
    long cap = to_long_checked(bound, "c4 bound");

    GraphDesc g = GraphDesc::cycle(4);
    std::vector<ArithStructure> out;
    for (long a = 1; a <= cap; ++a)
        for (long c = 1; c <= cap; ++c)
            for (long d = 1; d <= cap; ++d) {
                for (long b = 1; b <= cap; ++b) {
                    if ((b + c) % a != 0 || (a + d) % c != 0 || (b + c) % d != 0 || (a + d) % b != 0)
                        continue;
                    if (std::gcd(std::gcd(a, c), std::gcd(d, b)) != 1) continue;
                    IntVec r = int_vec({a, c, d, b});
                    IntVec dv = int_vec({(b + c) / a, (a + d) / c, (b + c) / d, (a + d) / b});
                    out.push_back(ArithStructure{g, std::move(dv), std::move(r), true});
                }
            }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// The worked four-state example system, in its published order.
inline std::vector<ColumnState> example_state_space() {
    return {column_state({2, 1}), column_state({1, 1}), column_state({1, 2}), column_state({3, 2})};
}

// All primitive column pairs occurring in the bounded C4 census,
// deduplicated and in canonical (lexicographic) order.
inline std::vector<ColumnState> state_space_from_c4(const Int& bound) {
    std::set<ColumnState> states;
    for (const ArithStructure& s : enumerate_c4(bound)) {
        ColumnState left{IntVec{s.r[0], s.r[3]}};  // (a, b)
        ColumnState right{IntVec{s.r[1], s.r[2]}}; // (c, d)
        if (gcd(left.values[0], left.values[1]) == 1) states.insert(left);
        if (gcd(right.values[0], right.values[1]) == 1) states.insert(right);
    }
    return {states.begin(), states.end()};
}

// Grid generalization: primitive columns occurring in the bounded census of
// Pn [] P2 structures.
inline std::vector<ColumnState> grid_state_space(int n, const Int& bound) {
    if (n < 2) throw DomainError("grid_state_space: need at least two rows");
    OracleConfig cfg{bound, GraphDesc::grid(n, 2, VertexOrdering::Kind::column_wise), true};
    std::set<ColumnState> states;
    for (const ArithStructure& s : oracle_enumerate(cfg).structures) {
        for (int col = 0; col < 2; ++col) {
            IntVec vals(s.r.begin() + col * n, s.r.begin() + (col + 1) * n);
            if (gcd_all(vals) == 1) states.insert(ColumnState{std::move(vals)});
        }
    }
    return {states.begin(), states.end()};
}

struct TransitionSystem {
    std::vector<ColumnState> states;
    std::vector<std::vector<int>> matrix; // matrix[s][t] = 1 iff admissible(s, t)

    int size() const { return static_cast<int>(states.size()); }

    ExactMatrix matrix_as_exact() const {
        ExactMatrix m(size(), size());
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) m.at(i, j) = matrix[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return m;
    }
};

inline TransitionSystem build_transition_matrix(std::vector<ColumnState> states) {
    if (states.empty()) throw DomainError("build_transition_matrix: no states");
    for (size_t i = 0; i < states.size(); ++i)
        for (size_t j = i + 1; j < states.size(); ++j)
            if (states[i] == states[j]) throw DomainError("build_transition_matrix: duplicate state");
    TransitionSystem ts{std::move(states), {}};
    size_t n = ts.states.size();
    ts.matrix.assign(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            ts.matrix[i][j] = admissible(ts.states[i], ts.states[j]) ? 1 : 0;
    return ts;
}

// 1^T T^{m-1} 1: the number of admissible state sequences of length m.
inline Int count_walks(const TransitionSystem& ts, int m) {
    if (m < 1) throw DomainError("count_walks: m must be >= 1");
    size_t n = ts.states.size();
    IntVec v(n, Int(1));
    for (int step = 1; step < m; ++step) {
        IntVec next(n, Int(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (ts.matrix[i][j]) next[i] += v[j];
        v = std::move(next);
    }
    Int total = 0;
    for (const Int& x : v) total += x;
    return total;
}

inline constexpr long kWalkEnumerationCap = 1000000;

// All admissible sequences (S_1..S_m), lexicographic by state index.
inline std::vector<std::vector<int>> enumerate_walks(const TransitionSystem& ts, int m) {
    if (m < 1) throw DomainError("enumerate_walks: m must be >= 1");
    if (count_walks(ts, m) > kWalkEnumerationCap)
        throw SizeCapError("enumerate_walks: walk count exceeds the enumeration cap");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            out.push_back(cur);
            return;
        }
        for (int j = 0; j < ts.size(); ++j) {
            if (depth > 0 && !ts.matrix[static_cast<size_t>(cur.back())][static_cast<size_t>(j)]) continue;
            cur.push_back(j);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

struct LiftResult {
    std::optional<ArithStructure> structure;
    std::vector<int> offending; // vertices where divisibility (or primitivity) fails

    bool ok() const { return structure.has_value(); }
};

// Concatenates the states column-wise and attempts to close the vertex
// equations. A failed lift is a reportable finding, not an error: walks are
// not imposed any divisibility hypothesis beyond admissibility, and the
// result is validated by full verification instead.
inline LiftResult lift_walk(const std::vector<ColumnState>& seq) {
    if (seq.empty()) throw DomainError("lift_walk: empty sequence");
    int n = seq.front().size();
    if (n < 2) throw DomainError("lift_walk: states need at least two rows");
    for (const ColumnState& s : seq)
        if (s.size() != n) throw DomainError("lift_walk: ragged state sizes");
    int m = static_cast<int>(seq.size());

    GraphDesc g = n == 2 ? GraphDesc::ladder(m, VertexOrdering::Kind::column_wise)
                         : GraphDesc::grid(n, m, VertexOrdering::Kind::column_wise);
    IntVec r;
    r.reserve(static_cast<size_t>(n) * static_cast<size_t>(m));
    for (const ColumnState& s : seq) r.insert(r.end(), s.values.begin(), s.values.end());

    LiftResult res;
    DivisibilityResult div = compute_d_from_r(g, r);
    if (!div.ok()) {
        res.offending = div.failing_vertices;
        return res;
    }
    if (gcd_all(r) != 1) {
        res.offending = {-1};
        return res;
    }
    ArithStructure s{g, std::move(*div.d), std::move(r), true};
    if (!verify(s).passed) throw std::logic_error("lift_walk: closed equations failed verification");
    res.structure = std::move(s);
    return res;
}

// Reconciles the walk count with the structures the walks actually produce.
struct CensusReport {
    TransitionSystem system;
    int m = 0;
    Int walk_count;
    long lift_success_walks = 0;
    long lift_failure_walks = 0;
    std::vector<ArithStructure> structures; // deduplicated by r, sorted
    std::vector<int> initial_states;        // state indices seen at column 1 of successful lifts
    std::vector<int> terminal_states;       // ... at column m
};

inline CensusReport transfer_census(const std::vector<ColumnState>& states, int m) {
    CensusReport rep;
    rep.system = build_transition_matrix(states);
    rep.m = m;
    rep.walk_count = count_walks(rep.system, m);

    std::set<int> initial, terminal;
    std::set<IntVec> seen;
    for (const std::vector<int>& walk : enumerate_walks(rep.system, m)) {
        std::vector<ColumnState> seq;
        seq.reserve(walk.size());
        for (int idx : walk) seq.push_back(rep.system.states[static_cast<size_t>(idx)]);
        LiftResult lift = lift_walk(seq);
        if (!lift.ok()) {
            ++rep.lift_failure_walks;
            continue;
        }
        ++rep.lift_success_walks;
        initial.insert(walk.front());
        terminal.insert(walk.back());
        if (seen.insert(lift.structure->r).second) rep.structures.push_back(std::move(*lift.structure));
    }
    std::sort(rep.structures.begin(), rep.structures.end(), lex_less);
    rep.initial_states.assign(initial.begin(), initial.end());
    rep.terminal_states.assign(terminal.begin(), terminal.end());
    return rep;
}

} // namespace arithlat
