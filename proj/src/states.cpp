#include "upb/states.hpp"

#include <sstream>

namespace upb {

SystemDims::SystemDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2)
        fail(ErrorCode::DimensionMismatch, "a composite system needs at least 2 parties");
    total_ = 1;
    for (std::size_t d : dims_) {
        if (d < 2) fail(ErrorCode::DimensionMismatch, "party dimensions must be >= 2");
        total_ *= d;
    }
}

std::string SystemDims::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "x" : "") << dims_[i];
    return os.str();
}

ProductState::ProductState(std::vector<ExactVector> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_)
        if (is_zero(f)) fail(ErrorCode::ZeroFactor, "product state with a zero factor");
}

bool ProductState::matches(const SystemDims& dims) const {
    if (factors_.size() != dims.parties()) return false;
    for (std::size_t p = 0; p < factors_.size(); ++p)
        if (factors_[p].size() != dims.dim(p)) return false;
    return true;
}

GaussianRational global_inner(const ProductState& p, const ProductState& q) {
    if (p.parties() != q.parties())
        fail(ErrorCode::DimensionMismatch, "inner product across different party counts");
    GaussianRational acc(Rational(1));
    for (std::size_t k = 0; k < p.parties(); ++k) {
        acc *= inner_product(p.factor(k), q.factor(k));
        if (acc.is_zero()) return acc;
    }
    return acc;
}

FullState expand(const ProductState& p) {
    FullState out = p.factor(0);
    for (std::size_t k = 1; k < p.parties(); ++k) out = kron(out, p.factor(k));
    return out;
}

ExactMatrix corresponding_matrix(const FullState& f, const SystemDims& dims) {
    if (!dims.bipartite())
        fail(ErrorCode::DimensionMismatch, "coefficient grid needs a bipartite system");
    const std::size_t m = dims.dim(0), n = dims.dim(1);
    if (f.size() != m * n)
        fail(ErrorCode::DimensionMismatch, "state length does not match dimensions");
    ExactMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = f[i * n + j];
    return out;
}

namespace {

// Flattens party p against the rest: rows indexed by party p.
ExactMatrix flatten_party(const FullState& f, const SystemDims& dims, std::size_t party) {
    const std::size_t dp = dims.dim(party);
    const std::size_t rest = dims.total() / dp;
    std::size_t inner = 1; // stride of party's index in the row-major layout
    for (std::size_t q = party + 1; q < dims.parties(); ++q) inner *= dims.dim(q);
    ExactMatrix out(dp, rest);
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
        const std::size_t i = (idx / inner) % dp;
        const std::size_t outer = idx / (inner * dp);
        const std::size_t col = outer * inner + idx % inner;
        out.at(i, col) = f[idx];
    }
    return out;
}

} // namespace

bool is_product(const FullState& f, const SystemDims& dims) {
    if (f.size() != dims.total())
        fail(ErrorCode::DimensionMismatch, "state length does not match dimensions");
    if (is_zero(f)) fail(ErrorCode::ZeroFactor, "zero state has no product decomposition");
    for (std::size_t p = 0; p + 1 < dims.parties(); ++p)
        if (rank(flatten_party(f, dims, p)) != 1) return false;
    return true;
}

UpbCandidate::UpbCandidate(SystemDims dims, std::vector<ProductState> states, std::string label)
    : dims_(std::move(dims)), states_(std::move(states)), label_(std::move(label)) {
    if (states_.empty() || states_.size() >= dims_.total())
        fail(ErrorCode::InvalidCandidate,
             "candidate needs 1 <= states < " + std::to_string(dims_.total()));
    for (const auto& s : states_)
        if (!s.matches(dims_))
            fail(ErrorCode::DimensionMismatch, "state factors do not match system dimensions");
    if (!check_orthonormality(dims_, states_))
        fail(ErrorCode::NonOrthogonal, "states are not pairwise orthogonal");
}

std::size_t missing_number(const UpbCandidate& u) { return u.missing_number(); }

bool check_orthonormality(const SystemDims&, std::span<const ProductState> states) {
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            if (!global_inner(states[i], states[j]).is_zero()) return false;
    return true;
}

bool check_orthonormality(const UpbCandidate& u) {
    return check_orthonormality(u.dims(), u.states());
}

UpbCandidate restrict_to_support_block(const UpbCandidate& u, std::size_t party) {
    if (party >= u.dims().parties())
        fail(ErrorCode::DimensionMismatch, "no such party");
    const std::size_t d = u.dims().dim(party);
    std::size_t lo = d, hi = 0;
    for (const auto& s : u.states())
        for (std::size_t x = 0; x < d; ++x)
            if (!s.factor(party)[x].is_zero()) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
    const std::size_t width = hi - lo + 1;
    if (lo == 0 && width == d) return u;

    std::vector<ProductState> states;
    states.reserve(u.size());
    for (const auto& s : u.states()) {
        auto factors = s.factors();
        ExactVector cut(factors[party].begin() + static_cast<std::ptrdiff_t>(lo),
                        factors[party].begin() + static_cast<std::ptrdiff_t>(lo + width));
        factors[party] = std::move(cut);
        states.emplace_back(std::move(factors));
    }
    auto dims = u.dims().list();
    dims[party] = width;
    return UpbCandidate(SystemDims(dims), std::move(states), u.label());
}

} // namespace upb
