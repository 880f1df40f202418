#include "upb/combinators.hpp"

#include <algorithm>

namespace upb {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::Base: return "base";
    case Rule::Import: return "import";
    case Rule::DirectSumB: return "direct_sum_b";
    case Rule::DirectSumA: return "direct_sum_a";
    case Rule::FourSquare: return "four_square";
    case Rule::Tensor: return "tensor";
    case Rule::Lift: return "lift";
    case Rule::CompleteBasisPad: return "complete_basis";
    }
    return "unknown";
}

Rule parse_rule(const std::string& name) {
    for (Rule r : {Rule::Base, Rule::Import, Rule::DirectSumB, Rule::DirectSumA, Rule::FourSquare,
                   Rule::Tensor, Rule::Lift, Rule::CompleteBasisPad})
        if (name == rule_name(r)) return r;
    fail(ErrorCode::BadDocument, "unknown derivation rule '" + name + "'");
}

bool derivation_arithmetic_ok(const DerivationNode& node) {
    for (const auto& c : node.children)
        if (!derivation_arithmetic_ok(c)) return false;
    switch (node.rule) {
    case Rule::Base:
    case Rule::Import:
        return true;
    case Rule::CompleteBasisPad:
        return node.missing == 0;
    case Rule::DirectSumB:
    case Rule::DirectSumA:
    case Rule::FourSquare:
    case Rule::Lift: {
        std::size_t sum = 0;
        for (const auto& c : node.children) sum += c.missing;
        return node.missing == sum;
    }
    case Rule::Tensor: {
        if (node.children.size() != 2) return false;
        std::size_t total = 1, kept = 1;
        for (const auto& c : node.children) {
            std::size_t d = 1;
            for (std::size_t x : c.dims) d *= x;
            total *= d;
            kept *= d - c.missing;
        }
        return node.missing == total - kept;
    }
    }
    return false;
}

bool is_complete(const Operand& op) { return std::holds_alternative<CompleteBasisOp>(op); }

const SystemDims& operand_dims(const Operand& op) {
    if (const auto* c = std::get_if<CompleteBasisOp>(&op)) return c->dims;
    return std::get<UpbCandidate>(op).dims();
}

namespace {

std::string operand_label(const Operand& op) {
    if (is_complete(op)) return "complete(" + operand_dims(op).str() + ")";
    return std::get<UpbCandidate>(op).label();
}

// States of the operand, restricted on `axis` to the support hull for
// genuine candidates (complete bases always have full support).
struct ResolvedBlock {
    SystemDims dims;
    std::vector<ProductState> states;
    std::size_t missing;
    bool complete;
};

ResolvedBlock resolve_block(const Operand& op, std::size_t axis) {
    if (const auto* c = std::get_if<CompleteBasisOp>(&op)) {
        if (!c->dims.bipartite())
            fail(ErrorCode::DimensionMismatch, "direct sums need bipartite operands");
        return {c->dims, complete_product_basis(c->dims), 0, true};
    }
    const auto& u = std::get<UpbCandidate>(op);
    if (!u.dims().bipartite())
        fail(ErrorCode::DimensionMismatch, "direct sums need bipartite operands");
    UpbCandidate trimmed = restrict_to_support_block(u, axis);
    auto states = trimmed.states();
    return {trimmed.dims(), std::move(states), trimmed.missing_number(), false};
}

UpbCandidate direct_sum(const Operand& s1, const Operand& s2, std::size_t axis) {
    if (is_complete(s1) && is_complete(s2))
        fail(ErrorCode::InvalidCandidate, "a direct sum of two complete bases is a full basis");
    ResolvedBlock b1 = resolve_block(s1, axis);
    ResolvedBlock b2 = resolve_block(s2, axis);
    const std::size_t other = 1 - axis;
    if (b1.dims.dim(other) != b2.dims.dim(other))
        fail(ErrorCode::DimensionMismatch,
             std::string(axis == 1 ? "first" : "second") + "-party dimensions must match");

    const std::size_t w1 = b1.dims.dim(axis), w2 = b2.dims.dim(axis);
    auto widen = [&](const ProductState& s, std::size_t offset) {
        auto factors = s.factors();
        ExactVector padded(w1 + w2);
        for (std::size_t x = 0; x < factors[axis].size(); ++x)
            padded[offset + x] = factors[axis][x];
        factors[axis] = std::move(padded);
        return ProductState(std::move(factors));
    };

    std::vector<ProductState> states;
    states.reserve(b1.states.size() + b2.states.size());
    for (const auto& s : b1.states) states.push_back(widen(s, 0));
    for (const auto& s : b2.states) states.push_back(widen(s, w1));

    auto dims = b1.dims.list();
    dims[axis] = w1 + w2;
    const std::string op = axis == 1 ? "dsum_b" : "dsum_a";
    return UpbCandidate(SystemDims(dims), std::move(states),
                        op + "(" + operand_label(s1) + "," + operand_label(s2) + ")");
}

} // namespace

UpbCandidate direct_sum_b(const Operand& s1, const Operand& s2) { return direct_sum(s1, s2, 1); }

UpbCandidate direct_sum_a(const Operand& s1, const Operand& s2) { return direct_sum(s1, s2, 0); }

UpbCandidate four_square(const Operand& s11, const Operand& s12, const Operand& s21,
                         const Operand& s22) {
    auto row = [](const Operand& left, const Operand& right) -> Operand {
        if (is_complete(left) && is_complete(right)) {
            const auto& dl = operand_dims(left);
            const auto& dr = operand_dims(right);
            if (dl.dim(0) != dr.dim(0))
                fail(ErrorCode::DimensionMismatch, "first-party dimensions must match");
            return CompleteBasisOp{SystemDims({dl.dim(0), dl.dim(1) + dr.dim(1)})};
        }
        return direct_sum_b(left, right);
    };
    return direct_sum_a(row(s11, s12), row(s21, s22));
}

UpbCandidate tensor_product(const UpbCandidate& s1, const UpbCandidate& s2) {
    if (!s1.dims().bipartite() || !s2.dims().bipartite())
        fail(ErrorCode::DimensionMismatch, "tensor products need bipartite operands");
    std::vector<ProductState> states;
    states.reserve(s1.size() * s2.size());
    for (const auto& a : s1.states())
        for (const auto& b : s2.states())
            states.push_back(ProductState(
                {kron(a.factor(0), b.factor(0)), kron(a.factor(1), b.factor(1))}));
    const SystemDims dims({s1.dims().dim(0) * s2.dims().dim(0),
                           s1.dims().dim(1) * s2.dims().dim(1)});
    return UpbCandidate(dims, std::move(states),
                        "tensor(" + s1.label() + "," + s2.label() + ")");
}

UpbCandidate lift(const std::vector<Operand>& parts) {
    if (parts.size() < 2)
        fail(ErrorCode::HypothesisViolated, "lift needs at least 2 parts");
    if (std::all_of(parts.begin(), parts.end(), [](const Operand& p) { return is_complete(p); }))
        fail(ErrorCode::InvalidCandidate, "lift needs at least one genuine UPB part");
    const SystemDims& base = operand_dims(parts.front());
    for (const auto& p : parts)
        if (operand_dims(p) != base)
            fail(ErrorCode::DimensionMismatch, "lift parts must share dimensions");

    const std::size_t K = parts.size();
    std::vector<ProductState> states;
    std::string label = "lift(";
    for (std::size_t i = 0; i < K; ++i) {
        ExactVector tag(K);
        tag[i] = GaussianRational(Rational(1));
        const std::vector<ProductState> part_states =
            is_complete(parts[i]) ? complete_product_basis(base)
                                  : std::get<UpbCandidate>(parts[i]).states();
        for (const auto& s : part_states) {
            auto factors = s.factors();
            factors.push_back(tag);
            states.emplace_back(std::move(factors));
        }
        label += (i ? "," : "") + operand_label(parts[i]);
    }
    auto dims = base.list();
    dims.push_back(K);
    return UpbCandidate(SystemDims(dims), std::move(states), label + ")");
}

UpbCandidate resolve_catalog_leaf(const std::string& name) {
    if (name == "tiles3x3") return tiles_3x3();
    if (name == "tiles3x3_shifted") return tiles_3x3_shifted();
    fail(ErrorCode::BadRecipe, "unknown catalog base '" + name + "'");
}

namespace {

Operand materialize_operand(const DerivationNode& node, const LeafResolver& resolve) {
    switch (node.rule) {
    case Rule::CompleteBasisPad:
        return CompleteBasisOp{SystemDims(node.dims)};
    case Rule::Base:
    case Rule::Import: {
        UpbCandidate u = resolve(node.name);
        for (std::size_t p = 0; p < u.dims().parties(); ++p)
            u = restrict_to_support_block(u, p);
        return u;
    }
    case Rule::DirectSumB:
        if (node.children.size() != 2)
            fail(ErrorCode::BadDocument, "direct_sum_b takes 2 children");
        return direct_sum_b(materialize_operand(node.children[0], resolve),
                            materialize_operand(node.children[1], resolve));
    case Rule::DirectSumA:
        if (node.children.size() != 2)
            fail(ErrorCode::BadDocument, "direct_sum_a takes 2 children");
        return direct_sum_a(materialize_operand(node.children[0], resolve),
                            materialize_operand(node.children[1], resolve));
    case Rule::FourSquare:
        if (node.children.size() != 4)
            fail(ErrorCode::BadDocument, "four_square takes 4 children");
        return four_square(materialize_operand(node.children[0], resolve),
                           materialize_operand(node.children[1], resolve),
                           materialize_operand(node.children[2], resolve),
                           materialize_operand(node.children[3], resolve));
    case Rule::Tensor: {
        if (node.children.size() != 2)
            fail(ErrorCode::BadDocument, "tensor takes 2 children");
        Operand a = materialize_operand(node.children[0], resolve);
        Operand b = materialize_operand(node.children[1], resolve);
        if (is_complete(a) || is_complete(b))
            fail(ErrorCode::InvalidCandidate, "tensor operands must be genuine UPBs");
        return tensor_product(std::get<UpbCandidate>(a), std::get<UpbCandidate>(b));
    }
    case Rule::Lift: {
        std::vector<Operand> parts;
        parts.reserve(node.children.size());
        for (const auto& c : node.children) parts.push_back(materialize_operand(c, resolve));
        return lift(parts);
    }
    }
    fail(ErrorCode::BadDocument, "unhandled derivation rule");
}

} // namespace

UpbCandidate materialize(const DerivationNode& node, const LeafResolver& resolve) {
    Operand out = materialize_operand(node, resolve);
    if (is_complete(out))
        fail(ErrorCode::InvalidCandidate, "a complete basis alone is not a UPB");
    const auto& u = std::get<UpbCandidate>(out);
    if (!node.dims.empty() &&
        (u.dims() != SystemDims(node.dims) || u.missing_number() != node.missing))
        fail(ErrorCode::BadDocument, "materialized states disagree with the derivation node");
    return u;
}

} // namespace upb
