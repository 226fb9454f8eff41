#pragma once

#include <cstddef>

#include "linsys/fp.hpp"

namespace linsys {

// Incremental row-echelon accumulator over F_p.  Rows are absorbed one at a
// time; pivot rows are kept normalized (leading entry 1) so each absorption
// is one pass of eliminations.  The rank never exceeds the column count, so
// memory stays at O(rank * cols) regardless of how many rows stream in.
class FpEchelon {
public:
    FpEchelon(const fp::Field& f, size_t cols) : f_(f), cols_(cols), pivot_of_col_(cols, SIZE_MAX) {}

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    // Reduces `row` in place against the basis; if a nonzero remainder is
    // left it becomes a new pivot row and the rank grows.
    bool absorb(std::vector<uint64_t>& row) {
        for (size_t c = 0; c < cols_; ++c) {
            if (row[c] == 0) continue;
            size_t pr = pivot_of_col_[c];
            if (pr == SIZE_MAX) {
                uint64_t s = f_.inv(row[c]);
                for (size_t j = c; j < cols_; ++j)
                    if (row[j]) row[j] = f_.mul(row[j], s);
                pivot_of_col_[c] = rows_.size();
                pivot_cols_.push_back(c);
                rows_.push_back(row);
                return true;
            }
            uint64_t factor = row[c];
            const std::vector<uint64_t>& prow = rows_[pr];
            for (size_t j = c; j < cols_; ++j)
                if (prow[j]) row[j] = f_.sub(row[j], f_.mul(factor, prow[j]));
        }
        return false;
    }

    // Kernel of the absorbed row space acting on column vectors: one basis
    // vector per free column, after back-substituting to reduced echelon
    // form.  Column order of the basis is the free-column order.
    std::vector<std::vector<uint64_t>> kernel_basis() {
        // back-substitute: clear pivot columns above
        for (size_t i = rows_.size(); i-- > 0;) {
            size_t pc = pivot_cols_[i];
            for (size_t k = 0; k < rows_.size(); ++k) {
                if (k == i) continue;
                uint64_t factor = rows_[k][pc];
                if (!factor) continue;
                for (size_t j = pc; j < cols_; ++j)
                    if (rows_[i][j]) rows_[k][j] = f_.sub(rows_[k][j], f_.mul(factor, rows_[i][j]));
            }
        }
        std::vector<std::vector<uint64_t>> basis;
        for (size_t c = 0; c < cols_; ++c) {
            if (pivot_of_col_[c] != SIZE_MAX) continue;
            std::vector<uint64_t> v(cols_, 0);
            v[c] = 1;
            for (size_t i = 0; i < rows_.size(); ++i)
                v[pivot_cols_[i]] = f_.neg(rows_[i][c]);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    fp::Field f_;
    size_t cols_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<size_t> pivot_cols_;       // pivot column of each stored row
    std::vector<size_t> pivot_of_col_;     // inverse map, SIZE_MAX = free
};

// Rank of an explicit row list.
inline size_t fp_rank(const fp::Field& f, std::vector<std::vector<uint64_t>> rows, size_t cols) {
    FpEchelon ech(f, cols);
    for (auto& r : rows) ech.absorb(r);
    return ech.rank();
}

// Determinant-nonzero test for a square matrix, by elimination.
inline bool fp_nonsingular(const fp::Field& f, std::vector<std::vector<uint64_t>> m) {
    size_t k = m.size();
    FpEchelon ech(f, k);
    for (auto& r : m) ech.absorb(r);
    return ech.rank() == k;
}

// One nonzero kernel vector of an (n x n+1) system of full rank n.
inline std::vector<uint64_t> fp_nullvector(const fp::Field& f,
                                           std::vector<std::vector<uint64_t>> rows,
                                           size_t cols) {
    FpEchelon ech(f, cols);
    for (auto& r : rows) ech.absorb(r);
    auto basis = ech.kernel_basis();
    if (basis.size() != 1) throw std::runtime_error("expected a one-dimensional kernel");
    return basis[0];
}

}  // namespace linsys
