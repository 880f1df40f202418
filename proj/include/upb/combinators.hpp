#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "upb/catalog.hpp"
#include "upb/states.hpp"

namespace upb {

enum class Rule {
    Base,
    Import,
    DirectSumB,
    DirectSumA,
    FourSquare,
    Tensor,
    Lift,
    CompleteBasisPad,
};

const char* rule_name(Rule r);
Rule parse_rule(const std::string& name);

/// Provenance tree for a constructed UPB. Leaves are named catalog bases,
/// imports, or complete product bases (missing 0); inner nodes record the
/// combination rule. Missing numbers add up along direct sums and lifts;
/// tensor nodes satisfy missing = D - prod(sizes).
struct DerivationNode {
    Rule rule = Rule::Base;
    std::string name;                  // Base / Import leaf identifier
    std::vector<std::size_t> dims;
    std::size_t missing = 0;
    std::vector<DerivationNode> children;

    bool leaf() const { return children.empty(); }
};

/// Checks the missing-number arithmetic of every inner node.
bool derivation_arithmetic_ok(const DerivationNode& node);

struct CompleteBasisOp {
    SystemDims dims;
};

/// A combinator operand: a genuine candidate or a complete product basis.
using Operand = std::variant<UpbCandidate, CompleteBasisOp>;

bool is_complete(const Operand& op);
const SystemDims& operand_dims(const Operand& op);

/// Union of two blocks along the second party: the left operand keeps its
/// columns, the right operand's columns are appended. Each genuine operand
/// is first restricted to the contiguous hull of its second-party support,
/// so a candidate stored on an offset block composes as that block's UPB.
/// At most one operand may be a complete basis.
UpbCandidate direct_sum_b(const Operand& s1, const Operand& s2);

/// Mirror of direct_sum_b along the first party.
UpbCandidate direct_sum_a(const Operand& s1, const Operand& s2);

/// 2x2 block composition: rows via direct_sum_a of the two column sums.
/// Missing number is the four-way sum. At least one block must be genuine.
UpbCandidate four_square(const Operand& s11, const Operand& s12, const Operand& s21,
                         const Operand& s22);

/// Pairwise tensor of two genuine bipartite UPBs; factors multiply per
/// party and the result has size l1*l2 in (m1*m2)x(n1*n2).
UpbCandidate tensor_product(const UpbCandidate& s1, const UpbCandidate& s2);

/// Adds one party of dimension K = |parts|; the states of part i gain the
/// extra factor |i>. Parts must share dimensions and at least one must be
/// a genuine UPB.
UpbCandidate lift(const std::vector<Operand>& parts);

/// Resolves Base/Import leaves by name. Must throw for unknown names.
using LeafResolver = std::function<UpbCandidate(const std::string&)>;

/// Rebuilds the states of a derivation tree. Leaves are resolved, then
/// restricted to their support hull so block-shaped catalog entries
/// compose as their block UPBs. Fails if the rebuilt dims or missing
/// number disagree with the node.
UpbCandidate materialize(const DerivationNode& node, const LeafResolver& resolve);

/// Default resolver over the built-in catalog bases.
UpbCandidate resolve_catalog_leaf(const std::string& name);

} // namespace upb
