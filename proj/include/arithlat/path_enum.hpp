#pragma once

#include <set>
#include <vector>

#include "arithlat/structure.hpp"

namespace arithlat {

inline constexpr int kCatalanCap = 30;
inline constexpr int kPathEnumCap = 14;

inline Int catalan(int k) {
    if (k < 0) throw DomainError("catalan: negative index");
    if (k > kCatalanCap) throw SizeCapError("catalan: index exceeds cap");
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * static_cast<unsigned long>(k), static_cast<unsigned long>(k));
    return c / (k + 1);
}

struct PathStructureSet {
    int n = 0;
    std::vector<ArithStructure> structures; // lexicographically sorted by r
};

// Complete enumeration of Arith(Pn) by subdivision closure:
//
//   Arith(P2) = {(1,1)};  Arith(Pk) = {all-ones} u
//       {insert r_i + r_{i+1} between adjacent entries of Arith(P_{k-1})}.
//
// Completeness rests on smoothing: any non-constant path structure has an
// interior vertex with d = 1 whose removal yields a structure on the
// shorter path, so the closure reaches everything. Cross-checked against
// the bounded oracle at small n, and the cardinality is checked against the
// Catalan closed form here.
//
// Arith(P1) is empty — the single vertex equation d*r = 0 has no positive
// solution — so n = 1 returns the empty set.
inline PathStructureSet enumerate_paths(int n) {
    if (n < 1) throw DomainError("enumerate_paths: n must be >= 1");
    if (n > kPathEnumCap) throw SizeCapError("enumerate_paths: n exceeds Catalan-growth cap");

    PathStructureSet out;
    out.n = n;
    if (n == 1) return out;

    std::set<IntVec> level{IntVec{Int(1), Int(1)}};
    for (int k = 3; k <= n; ++k) {
        std::set<IntVec> next;
        next.insert(IntVec(static_cast<size_t>(k), Int(1)));
        for (const IntVec& r : level) {
            for (size_t i = 0; i + 1 < r.size(); ++i) {
                IntVec grown;
                grown.reserve(r.size() + 1);
                grown.insert(grown.end(), r.begin(), r.begin() + static_cast<long>(i) + 1);
                grown.push_back(r[i] + r[i + 1]);
                grown.insert(grown.end(), r.begin() + static_cast<long>(i) + 1, r.end());
                next.insert(std::move(grown));
            }
        }
        level = std::move(next);
    }

    GraphDesc g = GraphDesc::path(n);
    for (const IntVec& r : level) {
        DivisibilityResult div = compute_d_from_r(g, r);
        if (!div.ok()) throw std::logic_error("enumerate_paths: subdivision produced a non-structure");
        out.structures.push_back(ArithStructure{g, std::move(*div.d), r, true});
    }
    if (Int(static_cast<long>(out.structures.size())) != catalan(n - 1))
        throw std::logic_error("enumerate_paths: cardinality disagrees with the Catalan closed form");
    return out;
}

} // namespace arithlat
