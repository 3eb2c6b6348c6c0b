#pragma once

#include <functional>
#include <vector>

#include "lapinv/darboux.hpp"
#include "lapinv/invariants.hpp"

namespace lapinv {

/// lhs = 0, solved as leading = rhs.
struct JetRelation {
    RationalExpr lhs;
    JetSymbol leading;
    RationalExpr rhs;
};

/// Ranking of jets: total order, then dx, then function name.
bool ranks_below(const JetSymbol& a, const JetSymbol& b);
/// Highest-ranked jet of e. Throws TargetAbsent if e has none.
JetSymbol leading_jet(const RationalExpr& e);

/// Solves e = 0 for target. Throws TargetAbsent when target does not occur and
/// NotLinearInTarget when e is not linear in it or the solved form still
/// contains a jet ranked at or above target.
JetRelation solve_for_jet(const RationalExpr& e, const JetSymbol& target);

/// Differentiates rel along v and reduces the result by rel itself; the new
/// leading jet is rel.leading with one more derivative in v.
JetRelation prolong(const JetRelation& rel, Var v);

/// Replaces the leading jets of rels by their right-hand sides until none
/// remains. Leading jets must be distinct. Throws NonTermination after
/// kMaxReductionPasses passes.
inline constexpr int kMaxReductionPasses = 64;
RationalExpr reduce(const RationalExpr& target, const std::vector<JetRelation>& rels);

/// Like reduce, but first prolongs rels until every derivative of a leading
/// jet occurring in the target is covered. New relations are appended to rels.
/// Throws NonTermination when a needed jet has total order above max_order.
RationalExpr reduce_with_prolongations(const RationalExpr& target, std::vector<JetRelation>& rels,
                                       unsigned max_order = 4);

/// Symbolic transport formula r -> r1 given the generator r0.
using XTransport = std::function<RationalExpr(const RationalExpr& r, const RationalExpr& r0)>;

/// x_residual(formula(r, r0), h1, k1) for the jet r, reduced modulo the
/// X-invariant relation of r with respect to (h, k) of L. Zero iff the formula
/// maps X-invariants of L to X-invariants of L1.
RationalExpr transport_closure_residual(const LPDO& l, const RationalExpr& r0, const XTransport& formula);
/// transport_closure_residual with transport_x_under_x.
bool verify_transport_closure(const LPDO& l, const RationalExpr& r0);

/// Relations of a generic kernel element z of L with pair invariants r, q
/// (jets of "z", "r", "q"): z_x = -(b+r) z, z_y = -(a+q) z and
/// z_xy = -a z_x - b z_y - c z.
std::vector<JetRelation> kernel_relations(const LPDO& l);

/// Pair invariants of (L1, M(z)) for the generic z of kernel_relations,
/// expressed through the jets r, q.
PairInvariants symbolic_pair_image(const DarbouxTriple& t);

} // namespace lapinv
