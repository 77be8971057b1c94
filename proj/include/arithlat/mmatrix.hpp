#pragma once

#include <vector>

#include "arithlat/matrix.hpp"

namespace arithlat {

// Fraction-free (Bareiss) elimination. Exact over the integers with
// polynomially bounded intermediate growth; row swaps track the sign.
inline Int determinant(const ExactMatrix& m) {
    int n = m.dim();
    ExactMatrix w = m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = k; j < n; ++j) swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

// Irreducibility = strong connectivity of the digraph on {0..n-1} with an
// edge i->j whenever i != j and m_ij != 0. A 1x1 matrix is irreducible.
inline bool is_irreducible(const ExactMatrix& m) {
    int n = m.dim();
    if (n == 1) return true;
    auto reaches_all = [&](bool transpose) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (u == v || seen[static_cast<size_t>(u)]) continue;
                const Int& e = transpose ? m.at(u, v) : m.at(v, u);
                if (e != 0) {
                    seen[static_cast<size_t>(u)] = 1;
                    ++count;
                    stack.push_back(u);
                }
            }
        }
        return count == n;
    };
    return reaches_all(false) && reaches_all(true);
}

struct MMatrixReport {
    bool is_z_matrix = false;
    bool is_irreducible = false;
    Int determinant;
    Int min_proper_principal_minor; // 1 when there are none (dim 1)
    bool is_almost_nonsingular_m = false;
};

inline ExactMatrix principal_submatrix(const ExactMatrix& m, unsigned mask) {
    std::vector<int> idx;
    for (int i = 0; i < m.dim(); ++i)
        if (mask & (1u << i)) idx.push_back(i);
    ExactMatrix s(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = m.at(idx[i], idx[j]);
    return s;
}

// Exhausts all 2^dim - 2 proper principal minors, so the dimension is
// capped; callers that only need det or irreducibility use the fast paths
// above.
inline constexpr int kMinorDimCap = 14;

inline MMatrixReport m_matrix_report(const ExactMatrix& m) {
    int n = m.dim();
    if (n > kMinorDimCap) throw SizeCapError("m_matrix_report: dimension exceeds minor-enumeration cap");

    MMatrixReport rep;
    rep.is_z_matrix = true;
    for (int i = 0; i < n && rep.is_z_matrix; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m.at(i, j) > 0) { rep.is_z_matrix = false; break; }
    rep.is_irreducible = is_irreducible(m);
    rep.determinant = determinant(m);

    bool all_minors_positive = true;
    Int min_minor = 1;
    bool first = true;
    unsigned full = (1u << n) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        Int d = determinant(principal_submatrix(m, mask));
        if (first || d < min_minor) {
            min_minor = d;
            first = false;
        }
        if (d <= 0) all_minors_positive = false;
    }
    rep.min_proper_principal_minor = min_minor;
    rep.is_almost_nonsingular_m = rep.is_z_matrix && all_minors_positive && rep.determinant >= 0;
    return rep;
}

} // namespace arithlat
