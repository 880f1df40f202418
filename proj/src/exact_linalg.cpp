#include "upb/exact_linalg.hpp"

#include <utility>

namespace upb {

bool is_zero(const ExactVector& v) {
    for (const auto& z : v)
        if (!z.is_zero()) return false;
    return true;
}

GaussianRational inner_product(const ExactVector& v, const ExactVector& w) {
    if (v.size() != w.size())
        fail(ErrorCode::DimensionMismatch, "inner product of vectors with different lengths");
    GaussianRational acc;
    for (std::size_t i = 0; i < v.size(); ++i) acc += v[i].conj() * w[i];
    return acc;
}

ExactVector conjugate(const ExactVector& v) {
    ExactVector out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(z.conj());
    return out;
}

ExactVector kron(const ExactVector& a, const ExactVector& b) {
    ExactVector out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows, std::size_t cols) {
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            fail(ErrorCode::DimensionMismatch, "row length does not match column count");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
    ExactVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

namespace {

// Fraction-free elimination to row echelon form. Returns pivot columns;
// the matrix is modified in place.
std::vector<std::size_t> echelonize(ExactMatrix& m) {
    std::vector<std::size_t> pivots;
    const std::size_t nr = m.rows(), nc = m.cols();
    GaussianRational prev(Rational(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pr = r;
        while (pr < nr && m.at(pr, c).is_zero()) ++pr;
        if (pr == nr) continue;
        if (pr != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(r, j), m.at(pr, j));
        const GaussianRational pivot = m.at(r, c);
        for (std::size_t i = r + 1; i < nr; ++i) {
            const GaussianRational factor = m.at(i, c);
            for (std::size_t j = c + 1; j < nc; ++j)
                m.at(i, j) = (pivot * m.at(i, j) - factor * m.at(r, j)) / prev;
            m.at(i, c) = GaussianRational();
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const ExactMatrix& m) {
    ExactMatrix work = m;
    return echelonize(work).size();
}

std::vector<ExactVector> null_space_basis(const ExactMatrix& m) {
    ExactMatrix work = m;
    const std::vector<std::size_t> pivots = echelonize(work);
    const std::size_t nc = m.cols();

    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<ExactVector> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        ExactVector v(nc);
        v[f] = GaussianRational(Rational(1));
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t p = pivots[k];
            if (p > f) continue;
            GaussianRational acc;
            for (std::size_t j = p + 1; j < nc; ++j)
                if (!v[j].is_zero()) acc += work.at(k, j) * v[j];
            v[p] = -(acc / work.at(k, p));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool IncrementalRank::push(const ExactVector& v) {
    if (v.size() != dim_)
        fail(ErrorCode::DimensionMismatch, "constraint length does not match dimension");
    ExactVector w = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (w[p].is_zero()) continue;
        const GaussianRational pivot = rows_[k][p];
        const GaussianRational factor = w[p];
        for (std::size_t j = 0; j < dim_; ++j) w[j] = pivot * w[j] - factor * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < dim_ && w[p].is_zero()) ++p;
    if (p == dim_) return false;
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
}

void IncrementalRank::pop_if(bool pushed) {
    if (!pushed) return;
    rows_.pop_back();
    pivots_.pop_back();
}

ExactVector IncrementalRank::complement_vector() const {
    if (rank() >= dim_)
        fail(ErrorCode::Internal, "no complement vector: constraints span the space");
    auto basis = null_space_basis(ExactMatrix::from_rows(rows_, dim_));
    return basis.front();
}

} // namespace upb
