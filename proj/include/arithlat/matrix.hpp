#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arithlat/bigint.hpp"
#include "arithlat/errors.hpp"
#include "arithlat/ordering.hpp"

namespace arithlat {

// Dense matrix of exact integers. Square in almost all uses (adjacency,
// transition, diag(d)-A); rectangular only for the ladder bridge block.
// Dense is fine at desk scale (dims well under ~200).
class ExactMatrix {
  public:
    ExactMatrix() = default;

    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) throw DomainError("matrix dimensions must be positive");
        entries_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    int dim() const {
        if (!square()) throw DomainError("matrix is not square");
        return rows_;
    }

    Int& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    // Mathematical equality; the ordering tag is metadata and not compared.
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    ExactMatrix transposed() const {
        ExactMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::optional<VertexOrdering> ordering;

  private:
    int rows_ = 0;
    int cols_ = 0;
    IntVec entries_;
};

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
    ExactMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

inline ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("matrix sum dimension mismatch");
    ExactMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

inline IntVec operator*(const ExactMatrix& a, const IntVec& v) {
    if (a.cols() != static_cast<int>(v.size())) throw DomainError("matrix-vector dimension mismatch");
    IntVec out(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out[static_cast<size_t>(i)] += a.at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

inline ExactMatrix matrix_power(const ExactMatrix& m, unsigned e) {
    int n = m.dim();
    ExactMatrix acc = ExactMatrix::identity(n);
    for (unsigned k = 0; k < e; ++k) acc = acc * m;
    return acc;
}

// Block matrix whose (i,j) block is a_ij * B.
inline ExactMatrix kronecker_product(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Int& aij = a.at(i, j);
            if (aij == 0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    k.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
        }
    return k;
}

inline bool is_symmetric(const ExactMatrix& m) {
    if (!m.square()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

inline bool has_zero_diagonal(const ExactMatrix& m) {
    for (int i = 0; i < m.dim(); ++i)
        if (m.at(i, i) != 0) return false;
    return true;
}

inline IntVec row_sums(const ExactMatrix& m) {
    IntVec s(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s[static_cast<size_t>(i)] += m.at(i, j);
    return s;
}

inline void check_permutation(std::span<const int> perm, int n) {
    if (static_cast<int>(perm.size()) != n) throw DomainError("permutation length mismatch");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<size_t>(p)]) throw DomainError("not a permutation");
        seen[static_cast<size_t>(p)] = 1;
    }
}

// P A P^T for the relabelling p with p[new_index] = old_index.
inline ExactMatrix conjugate_by_permutation(const ExactMatrix& a, std::span<const int> perm) {
    int n = a.dim();
    check_permutation(perm, n);
    ExactMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = a.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    return out;
}

inline IntVec apply_permutation(std::span<const int> perm, const IntVec& v) {
    check_permutation(perm, static_cast<int>(v.size()));
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[static_cast<size_t>(perm[i])];
    return out;
}

} // namespace arithlat
