#pragma once

#include <cstddef>
#include <vector>

#include "upb/rational.hpp"

namespace upb {

using ExactVector = std::vector<GaussianRational>;

bool is_zero(const ExactVector& v);

/// Hermitian inner product, conjugate-linear in the first argument.
GaussianRational inner_product(const ExactVector& v, const ExactVector& w);

ExactVector conjugate(const ExactVector& v);
ExactVector kron(const ExactVector& a, const ExactVector& b);

/// Dense row-major matrix over the Gaussian rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix from_rows(const std::vector<ExactVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    ExactVector row(std::size_t r) const;

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> a_;
};

/// Exact rank via fraction-free (Bareiss) elimination.
std::size_t rank(const ExactMatrix& m);

/// Basis of { v : M v = 0 }, exactly cols - rank(M) vectors.
/// Rows are typically conjugated constraint vectors, so every returned
/// vector is orthogonal to the original constraints under the Hermitian
/// inner product.
std::vector<ExactVector> null_space_basis(const ExactMatrix& m);

/// Rank bookkeeping for one constraint set, grown a row at a time with
/// undo. Rows are kept in fraction-free echelon form; push() reduces the
/// new row against the stored ones and keeps it only if independent.
class IncrementalRank {
public:
    explicit IncrementalRank(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Returns true if the vector increased the rank; pop_if undoes it.
    bool push(const ExactVector& v);
    void pop_if(bool pushed);

    /// Any nonzero vector orthogonal (bilinearly) to all stored rows.
    /// Requires rank() < dim().
    ExactVector complement_vector() const;

private:
    std::size_t dim_;
    std::vector<ExactVector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace upb
