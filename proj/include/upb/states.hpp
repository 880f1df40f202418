#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "upb/exact_linalg.hpp"

namespace upb {

/// Party dimensions of a composite system, slowest index first.
class SystemDims {
public:
    SystemDims() = default;
    explicit SystemDims(std::vector<std::size_t> dims);

    std::size_t parties() const { return dims_.size(); }
    std::size_t dim(std::size_t party) const { return dims_.at(party); }
    std::size_t total() const { return total_; }
    const std::vector<std::size_t>& list() const { return dims_; }

    bool bipartite() const { return dims_.size() == 2; }

    friend bool operator==(const SystemDims& a, const SystemDims& b) { return a.dims_ == b.dims_; }
    friend bool operator!=(const SystemDims& a, const SystemDims& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<std::size_t> dims_;
    std::size_t total_ = 0;
};

/// Unnormalized product state: one nonzero exact vector per party.
class ProductState {
public:
    ProductState() = default;
    ProductState(std::vector<ExactVector> factors);

    std::size_t parties() const { return factors_.size(); }
    const ExactVector& factor(std::size_t party) const { return factors_.at(party); }
    const std::vector<ExactVector>& factors() const { return factors_; }

    bool matches(const SystemDims& dims) const;

    friend bool operator==(const ProductState& a, const ProductState& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<ExactVector> factors_;
};

/// Coefficients over the full product basis, slowest party first.
using FullState = ExactVector;

GaussianRational global_inner(const ProductState& p, const ProductState& q);
FullState expand(const ProductState& p);

/// Coefficient grid of a bipartite state: rows indexed by the first party.
ExactMatrix corresponding_matrix(const FullState& f, const SystemDims& dims);

/// Rank-1 test of the coefficient grid; multipartite states are product
/// iff every single-party-vs-rest flattening has rank 1.
bool is_product(const FullState& f, const SystemDims& dims);

class UpbCandidate {
public:
    UpbCandidate() = default;

    /// Validates: 1 <= |states| < D, factors nonzero and dimensioned,
    /// all pairwise global inner products exactly zero.
    UpbCandidate(SystemDims dims, std::vector<ProductState> states, std::string label);

    const SystemDims& dims() const { return dims_; }
    const std::vector<ProductState>& states() const { return states_; }
    std::size_t size() const { return states_.size(); }
    const std::string& label() const { return label_; }

    std::size_t missing_number() const { return dims_.total() - states_.size(); }

private:
    SystemDims dims_;
    std::vector<ProductState> states_;
    std::string label_;
};

std::size_t missing_number(const UpbCandidate& u);

/// True iff all pairwise global inner products vanish exactly.
bool check_orthonormality(const SystemDims& dims, std::span<const ProductState> states);
bool check_orthonormality(const UpbCandidate& u);

/// Restricts one party to the contiguous hull of its support, shifting
/// coordinates down. A candidate supported on a coordinate block of a
/// larger space is a UPB of the whole space's block iff its restriction
/// is one of the block space.
UpbCandidate restrict_to_support_block(const UpbCandidate& u, std::size_t party);

} // namespace upb
