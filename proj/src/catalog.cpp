#include "upb/catalog.hpp"

namespace upb {

const char* fact_source_name(FactSource s) {
    switch (s) {
    case FactSource::MinSizeLemma: return "MinSizeLemma";
    case FactSource::GenTilesLemma: return "GenTilesLemma";
    case FactSource::Table1Seed: return "Table1Seed";
    case FactSource::Imported: return "Imported";
    }
    return "unknown";
}

namespace {

ExactVector vec(std::initializer_list<long> entries) {
    ExactVector v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(Rational(e));
    return v;
}

ProductState ps(ExactVector a, ExactVector b) {
    return ProductState({std::move(a), std::move(b)});
}

} // namespace

UpbCandidate tiles_3x3() {
    std::vector<ProductState> states;
    states.push_back(ps(vec({1, 0, 0}), vec({1, -1, 0})));
    states.push_back(ps(vec({1, -1, 0}), vec({0, 0, 1})));
    states.push_back(ps(vec({0, 1, -1}), vec({1, 0, 0})));
    states.push_back(ps(vec({0, 0, 1}), vec({0, 1, -1})));
    states.push_back(ps(vec({1, 1, 1}), vec({1, 1, 1})));
    return UpbCandidate(SystemDims({3, 3}), std::move(states), "tiles3x3");
}

UpbCandidate tiles_3x3_shifted() {
    std::vector<ProductState> states;
    states.push_back(ps(vec({1, 0, 0}), vec({0, 0, 0, 1, -1, 0})));
    states.push_back(ps(vec({1, -1, 0}), vec({0, 0, 0, 0, 0, 1})));
    states.push_back(ps(vec({0, 0, 1}), vec({0, 0, 0, 0, 1, -1})));
    states.push_back(ps(vec({0, 1, -1}), vec({0, 0, 0, 1, 0, 0})));
    states.push_back(ps(vec({1, 1, 1}), vec({0, 0, 0, 1, 1, 1})));
    return UpbCandidate(SystemDims({3, 6}), std::move(states), "tiles3x3_shifted");
}

UpbCandidate embed(const UpbCandidate& u, std::size_t party, std::size_t offset,
                   std::size_t new_dim) {
    if (party >= u.dims().parties())
        fail(ErrorCode::DimensionMismatch, "no such party");
    const std::size_t d = u.dims().dim(party);
    if (offset + d > new_dim)
        fail(ErrorCode::DimensionMismatch, "embedding block out of range");

    std::vector<ProductState> states;
    states.reserve(u.size());
    for (const auto& s : u.states()) {
        auto factors = s.factors();
        ExactVector padded(new_dim);
        for (std::size_t x = 0; x < d; ++x) padded[offset + x] = factors[party][x];
        factors[party] = std::move(padded);
        states.emplace_back(std::move(factors));
    }
    auto dims = u.dims().list();
    dims[party] = new_dim;
    return UpbCandidate(SystemDims(dims), std::move(states), u.label());
}

std::vector<ProductState> complete_product_basis(const SystemDims& dims) {
    std::vector<ProductState> out;
    out.reserve(dims.total());
    std::vector<std::size_t> idx(dims.parties(), 0);
    for (std::size_t flat = 0; flat < dims.total(); ++flat) {
        std::vector<ExactVector> factors;
        factors.reserve(dims.parties());
        for (std::size_t p = 0; p < dims.parties(); ++p) {
            ExactVector e(dims.dim(p));
            e[idx[p]] = GaussianRational(Rational(1));
            factors.push_back(std::move(e));
        }
        out.emplace_back(std::move(factors));
        for (std::size_t p = dims.parties(); p-- > 0;) {
            if (++idx[p] < dims.dim(p)) break;
            idx[p] = 0;
        }
    }
    return out;
}

std::size_t min_upb_size(std::size_t d1, std::size_t d2) {
    if (d1 < 3 || d2 < 3)
        fail(ErrorCode::HypothesisViolated, "minimal UPB size needs both dimensions >= 3");
    return (d1 % 2 == 0 && d2 % 2 == 0) ? d1 + d2 : d1 + d2 - 1;
}

std::vector<ExistenceFact> existence_facts(std::size_t max_m, std::size_t max_n) {
    if (max_m < 3 || max_n < 3)
        fail(ErrorCode::HypothesisViolated, "fact grid needs max dimensions >= 3");
    std::vector<ExistenceFact> out;
    for (std::size_t d1 = 3; d1 <= max_m; ++d1) {
        for (std::size_t d2 = d1; d2 <= max_n; ++d2) {
            const SystemDims dims({d1, d2});
            out.push_back({dims, min_upb_size(d1, d2), FactSource::MinSizeLemma});
            if (d2 > 3)
                out.push_back({dims, d1 * d2 - 2 * d1 + 1, FactSource::GenTilesLemma});
        }
    }
    // Seed sets with explicit achievable sizes: 3x3 misses exactly 4;
    // 3x4 reaches every missing number 4..6.
    out.push_back({SystemDims({3, 3}), 5, FactSource::Table1Seed});
    if (max_n >= 4)
        for (std::size_t size = 6; size <= 8; ++size)
            out.push_back({SystemDims({3, 4}), size, FactSource::Table1Seed});
    return out;
}

} // namespace upb
