#pragma once

#include <algorithm>
#include <set>

#include "arithlat/oracle.hpp"
#include "arithlat/path_enum.hpp"
#include "arithlat/serialize.hpp"
#include "arithlat/transfer.hpp"

namespace arithlat {

// Machine-readable reports on claims that do not reproduce as stated. Each
// report records the measured quantities plus internal consistency checks;
// none of them hard-codes an interpretation.

// The four-state example system counts N_m walks, but not every walk lifts
// to a structure. Quantifies the gap.
struct CensusGapFinding {
    int m = 0;
    Int walk_count;
    long lifted_walks = 0;
    long failed_walks = 0;
    long distinct_structures = 0;
    bool consistent = false; // walks = lifted + failed, distinct <= lifted
};

inline CensusGapFinding census_gap_finding(int m = 3) {
    CensusReport census = transfer_census(example_state_space(), m);
    CensusGapFinding f;
    f.m = m;
    f.walk_count = census.walk_count;
    f.lifted_walks = census.lift_success_walks;
    f.failed_walks = census.lift_failure_walks;
    f.distinct_structures = static_cast<long>(census.structures.size());
    f.consistent = Int(f.lifted_walks) + Int(f.failed_walks) == f.walk_count &&
                   f.distinct_structures <= f.lifted_walks;
    return f;
}

// Measured |Arith(C4)| against the observed bracket
// C_{m-1} <= #Arith(P2 [] Pm) <= C_{m-1}^2 at m = 2.
struct C4ObservationFinding {
    Int bound;
    long observed_count = 0;
    Int catalan_lower;    // C_1
    Int catalan_upper_sq; // C_1^2
    bool lower_holds = false;
    bool upper_holds = false;
    bool consistent = false; // census routes agree (divisibility system vs oracle)
};

inline C4ObservationFinding c4_observation_finding(const Int& bound = 12) {
    C4ObservationFinding f;
    f.bound = bound;
    std::vector<ArithStructure> via_system = enumerate_c4(bound);
    f.observed_count = static_cast<long>(via_system.size());
    f.catalan_lower = catalan(1);
    f.catalan_upper_sq = catalan(1) * catalan(1);
    f.lower_holds = Int(f.observed_count) >= f.catalan_lower;
    f.upper_holds = Int(f.observed_count) <= f.catalan_upper_sq;

    OracleConfig cfg{bound, GraphDesc::cycle(4), true};
    EnumerationReport via_oracle = oracle_enumerate(cfg);
    std::set<IntVec> a, b;
    for (const ArithStructure& s : via_system) a.insert(s.r);
    for (const ArithStructure& s : via_oracle.structures) b.insert(s.r);
    f.consistent = a == b;
    return f;
}

// Enumerated sets at two entry bounds; stabilization between them is
// evidence of completeness, never proof.
struct StabilizationFinding {
    GraphDesc graph;
    Int bound_lo, bound_hi;
    long count_lo = 0, count_hi = 0;
    bool stable = false;     // counts agree
    bool monotone = false;   // low-bound set is contained in the high-bound set
    bool consistent = false; // monotone containment held
};

inline StabilizationFinding bound_stabilization_finding(const GraphDesc& g, const Int& lo = 8,
                                                        const Int& hi = 10) {
    if (lo > hi) throw DomainError("bound_stabilization_finding: bounds out of order");
    StabilizationFinding f;
    f.graph = g;
    f.bound_lo = lo;
    f.bound_hi = hi;
    EnumerationReport rep_lo = oracle_enumerate(OracleConfig{lo, g, true});
    EnumerationReport rep_hi = oracle_enumerate(OracleConfig{hi, g, true});
    f.count_lo = rep_lo.count;
    f.count_hi = rep_hi.count;
    f.stable = f.count_lo == f.count_hi;
    std::set<IntVec> hi_set;
    for (const ArithStructure& s : rep_hi.structures) hi_set.insert(s.r);
    f.monotone = std::all_of(rep_lo.structures.begin(), rep_lo.structures.end(),
                             [&](const ArithStructure& s) { return hi_set.count(s.r) > 0; });
    f.consistent = f.monotone;
    return f;
}

inline json to_json(const CensusGapFinding& f) {
    return json{{"finding", "census-gap"},
                {"m", f.m},
                {"walk_count", to_decimal(f.walk_count)},
                {"lifted_walks", f.lifted_walks},
                {"failed_walks", f.failed_walks},
                {"distinct_structures", f.distinct_structures},
                {"consistent", f.consistent}};
}

inline json to_json(const C4ObservationFinding& f) {
    return json{{"finding", "c4-count-vs-catalan-bracket"},
                {"bound", to_decimal(f.bound)},
                {"observed_count", f.observed_count},
                {"catalan_lower", to_decimal(f.catalan_lower)},
                {"catalan_upper_squared", to_decimal(f.catalan_upper_sq)},
                {"lower_holds", f.lower_holds},
                {"upper_holds", f.upper_holds},
                {"consistent", f.consistent}};
}

inline json to_json(const StabilizationFinding& f) {
    return json{{"finding", "bound-stabilization"},
                {"graph", to_json(f.graph)},
                {"bound_lo", to_decimal(f.bound_lo)},
                {"bound_hi", to_decimal(f.bound_hi)},
                {"count_lo", f.count_lo},
                {"count_hi", f.count_hi},
                {"stable", f.stable},
                {"monotone", f.monotone},
                {"consistent", f.consistent}};
}

inline json all_findings_json() {
    json arr = json::array();
    arr.push_back(to_json(census_gap_finding(3)));
    arr.push_back(to_json(c4_observation_finding(12)));
    arr.push_back(to_json(bound_stabilization_finding(GraphDesc::ladder(3, VertexOrdering::Kind::column_wise))));
    return arr;
}

} // namespace arithlat
