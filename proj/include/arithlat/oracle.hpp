#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "arithlat/parallel.hpp"
#include "arithlat/structure.hpp"

namespace arithlat {

// Bounded exhaustive enumeration: the ground truth every other enumeration
// route is checked against. Complete within the entry bound by
// construction; completeness beyond the bound is evidence, never proof.
struct OracleConfig {
    Int entry_bound;
    GraphDesc graph;
    bool dedup = true;
};

struct EnumerationReport {
    std::vector<ArithStructure> structures; // lexicographically sorted by r
    OracleConfig config;
    bool complete_within_bound = false;
    long count = 0;
};

inline constexpr double kOracleSearchCap = 1e9;

namespace detail {

// Vertices are assigned column-by-column on ladders and grids so every
// vertex's neighborhood closes as early as possible; each vertex's
// divisibility constraint prunes the instant its last neighbor gets a
// value. Row-wise declared orderings only change which index the value
// lands in, not the traversal.
inline std::vector<int> assignment_order(const GraphDesc& g) {
    std::vector<int> order;
    order.reserve(static_cast<size_t>(g.vertex_count()));
    if (g.is_product()) {
        VertexOrdering ord = g.grid_ordering();
        for (int j = 1; j <= ord.cols; ++j)
            for (int i = 1; i <= ord.rows; ++i) order.push_back(ord.flatten(i, j));
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) order.push_back(v);
    }
    return order;
}

struct SearchPlan {
    std::vector<int> order;                 // assignment order (declared indices)
    std::vector<std::vector<int>> nbrs;     // neighbor lists (declared indices)
    std::vector<std::vector<int>> check_at; // vertices whose equation closes at step t
};

inline SearchPlan make_plan(const GraphDesc& g) {
    SearchPlan plan{assignment_order(g), neighbor_lists(g), {}};
    size_t v = plan.order.size();
    std::vector<int> pos(v);
    for (size_t t = 0; t < v; ++t) pos[static_cast<size_t>(plan.order[t])] = static_cast<int>(t);
    plan.check_at.resize(v);
    for (size_t w = 0; w < v; ++w) {
        int t = pos[w];
        for (int u : plan.nbrs[w]) t = std::max(t, pos[static_cast<size_t>(u)]);
        plan.check_at[static_cast<size_t>(t)].push_back(static_cast<int>(w));
    }
    return plan;
}

inline void oracle_dfs(const SearchPlan& plan, long bound, size_t t, std::vector<long>& r,
                       std::vector<IntVec>& out) {
    size_t v = plan.order.size();
    if (t == v) {
        long g = 0;
        for (long x : r) g = std::gcd(g, x);
        if (g == 1) {
            IntVec rv;
            rv.reserve(v);
            for (long x : r) rv.emplace_back(x);
            out.push_back(std::move(rv));
        }
        return;
    }
    size_t slot = static_cast<size_t>(plan.order[t]);
    for (long val = 1; val <= bound; ++val) {
        r[slot] = val;
        bool ok = true;
        for (int w : plan.check_at[t]) {
            long s = 0;
            for (int u : plan.nbrs[static_cast<size_t>(w)]) s += r[static_cast<size_t>(u)];
            if (s == 0 || s % r[static_cast<size_t>(w)] != 0) {
                ok = false;
                break;
            }
        }
        if (ok) oracle_dfs(plan, bound, t + 1, r, out);
    }
    r[slot] = 0;
}

} // namespace detail

inline EnumerationReport oracle_enumerate(const OracleConfig& cfg) {
    if (cfg.entry_bound < 1) throw DomainError("oracle: entry bound must be >= 1");
    int v = cfg.graph.vertex_count();
    Int space = 1;
    for (int i = 0; i < v; ++i) {
        space *= cfg.entry_bound;
        if (space.get_d() > kOracleSearchCap)
            throw SizeCapError("oracle: search space exceeds the 1e9 cap");
    }
    long bound = to_long_checked(cfg.entry_bound, "oracle entry bound");

    detail::SearchPlan plan = detail::make_plan(cfg.graph);

    // Branches split on the first assigned vertex; each writes its own slot.
    int branches = static_cast<int>(bound);
    std::vector<std::vector<IntVec>> per_branch(static_cast<size_t>(branches));
    parallel_for_index(branches, [&](int b) {
        std::vector<long> r(static_cast<size_t>(v), 0);
        size_t first = static_cast<size_t>(plan.order[0]);
        r[first] = b + 1;
        bool ok = true;
        for (int w : plan.check_at[0]) {
            long s = 0;
            for (int u : plan.nbrs[static_cast<size_t>(w)]) s += r[static_cast<size_t>(u)];
            if (s == 0 || s % r[static_cast<size_t>(w)] != 0) ok = false;
        }
        if (ok) detail::oracle_dfs(plan, bound, 1, r, per_branch[static_cast<size_t>(b)]);
    });

    EnumerationReport rep;
    rep.config = cfg;
    std::vector<IntVec> rs;
    for (auto& br : per_branch) rs.insert(rs.end(), br.begin(), br.end());
    std::sort(rs.begin(), rs.end());
    if (cfg.dedup) rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    for (IntVec& r : rs) {
        DivisibilityResult div = compute_d_from_r(cfg.graph, r);
        if (!div.ok()) throw std::logic_error("oracle: pruned search emitted a non-structure");
        rep.structures.push_back(ArithStructure{cfg.graph, std::move(*div.d), std::move(r), true});
    }
    rep.count = static_cast<long>(rep.structures.size());
    rep.complete_within_bound = true;
    return rep;
}

// Count of enumerated ladder structures with r(1,i) = r(2,i) for every i.
inline long oracle_count_symmetric(const OracleConfig& cfg) {
    if (cfg.graph.family != Family::ladder) throw DomainError("oracle_count_symmetric: ladder graphs only");
    EnumerationReport rep = oracle_enumerate(cfg);
    VertexOrdering ord = cfg.graph.grid_ordering();
    long count = 0;
    for (const ArithStructure& s : rep.structures) {
        bool sym = true;
        for (int j = 1; j <= ord.cols && sym; ++j)
            sym = s.r[static_cast<size_t>(ord.flatten(1, j))] == s.r[static_cast<size_t>(ord.flatten(2, j))];
        if (sym) ++count;
    }
    return count;
}

} // namespace arithlat
