#pragma once

// Recorded reference values shared by the unit and acceptance suites: the
// published example structures on P4, the ladder P2[]P3 / P2[]P4, and the
// four-state transition system with its 17-row structure table.

#include <vector>

#include <arithlat/structure.hpp>

namespace refvals {

struct RPair {
    std::vector<long> r;
    std::vector<long> d;
};

// Arith(P4) as listed: three of the five structures.
inline const std::vector<RPair> kPath4 = {
    {{1, 2, 1, 1}, {2, 1, 3, 1}},
    {{1, 1, 2, 1}, {1, 3, 1, 2}},
    {{1, 1, 1, 1}, {1, 2, 2, 1}},
};

// Their stacked images on the row-wise ladder m=4.
inline const std::vector<RPair> kStacked4 = {
    {{1, 2, 1, 1, 1, 2, 1, 1}, {3, 2, 4, 2, 3, 2, 4, 2}},
    {{1, 1, 2, 1, 1, 1, 2, 1}, {2, 4, 2, 3, 2, 4, 2, 3}},
    {{1, 1, 1, 1, 1, 1, 1, 1}, {2, 3, 3, 2, 2, 3, 3, 2}},
};

// Non-symmetric examples, row-wise.
inline const RPair kNonSym3 = {{2, 1, 1, 1, 1, 1}, {1, 4, 2, 3, 3, 2}};
// The m=4 example as printed; d_{1,3}=4 contradicts its own defining
// equations (the vertex (1,3) sum is 3), and det(diag(d)-A) = 41, so no
// positive r pairs with this d at all.
inline const RPair kNonSym4Printed = {{2, 1, 1, 1, 1, 1, 1, 1}, {1, 4, 4, 2, 3, 3, 3, 2}};
// The value the example's own formulas produce.
inline const RPair kNonSym4Consistent = {{2, 1, 1, 1, 1, 1, 1, 1}, {1, 4, 3, 2, 3, 3, 3, 2}};

// Four-state system in published order: (2,1), (1,1), (1,2), (3,2).
inline const std::vector<std::vector<long>> kExampleStates = {{2, 1}, {1, 1}, {1, 2}, {3, 2}};

inline const std::vector<std::vector<int>> kT = {
    {0, 1, 1, 0},
    {1, 1, 1, 1},
    {1, 1, 0, 0},
    {0, 1, 0, 0},
};

inline const std::vector<std::vector<int>> kTSquared = {
    {2, 2, 1, 1},
    {2, 4, 2, 1},
    {1, 2, 2, 1},
    {1, 1, 1, 1},
};

inline constexpr long kWalkCount3 = 25;

struct TableRow {
    std::vector<int> seq; // 0-based state indices
    std::vector<long> r;  // column-wise
    std::vector<long> d;
    bool lifts; // whether the sequence itself closes the vertex equations
};

// All 17 rows of the structure table. Row 5 prints the same (r,d) as row 1
// while its sequence (S1,S3,S1) fails to lift (vertex (2,2) sum 3 over
// r=2), so the table holds 16 distinct structures.
inline const std::vector<TableRow> kTable1 = {
    {{0, 1, 1}, {2, 1, 1, 1, 1, 1}, {1, 3, 4, 3, 2, 2}, true},
    {{0, 1, 2}, {2, 1, 1, 1, 1, 2}, {1, 3, 4, 4, 3, 1}, true},
    {{0, 1, 3}, {2, 1, 1, 1, 3, 2}, {1, 3, 6, 4, 1, 2}, true},
    {{0, 1, 0}, {2, 1, 1, 1, 2, 1}, {1, 3, 5, 3, 1, 3}, true},
    {{0, 2, 0}, {2, 1, 1, 1, 1, 1}, {1, 3, 4, 3, 2, 2}, false},
    {{1, 1, 1}, {1, 1, 1, 1, 1, 1}, {2, 2, 3, 3, 2, 2}, true},
    {{1, 1, 2}, {1, 1, 1, 1, 1, 2}, {2, 2, 3, 4, 3, 1}, true},
    {{1, 1, 3}, {1, 1, 1, 1, 3, 2}, {2, 2, 5, 4, 1, 2}, true},
    {{1, 1, 0}, {1, 1, 1, 1, 2, 1}, {2, 2, 4, 3, 1, 3}, true},
    {{2, 1, 1}, {1, 2, 1, 1, 1, 1}, {3, 1, 3, 4, 2, 2}, true},
    {{2, 1, 2}, {1, 2, 1, 1, 1, 2}, {3, 1, 3, 5, 3, 1}, true},
    {{2, 1, 0}, {1, 2, 1, 1, 2, 1}, {3, 1, 4, 4, 1, 3}, true},
    {{2, 1, 3}, {1, 2, 1, 1, 3, 2}, {3, 1, 5, 5, 1, 2}, true},
    {{3, 1, 1}, {3, 2, 1, 1, 1, 1}, {1, 2, 5, 4, 2, 2}, true},
    {{3, 1, 2}, {3, 2, 1, 1, 1, 2}, {1, 2, 5, 5, 3, 1}, true},
    {{3, 1, 3}, {3, 2, 1, 1, 3, 2}, {1, 2, 7, 5, 1, 2}, true},
    {{3, 1, 0}, {3, 2, 1, 1, 2, 1}, {1, 2, 6, 4, 1, 3}, true},
};

inline arithlat::IntVec iv(const std::vector<long>& xs) {
    arithlat::IntVec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace refvals
