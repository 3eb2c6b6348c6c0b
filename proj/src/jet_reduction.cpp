#include "lapinv/jet_reduction.hpp"

#include <algorithm>

#include "lapinv/error.hpp"
#include "lapinv/transport.hpp"

namespace lapinv {

bool ranks_below(const JetSymbol& a, const JetSymbol& b) {
    if (a.order() != b.order())
        return a.order() < b.order();
    if (a.dx != b.dx)
        return a.dx < b.dx;
    return a.func < b.func;
}

JetSymbol leading_jet(const RationalExpr& e) {
    auto jets = e.jets();
    if (jets.empty())
        throw Error(Errc::TargetAbsent, to_string(e) + " contains no jets");
    return *std::max_element(jets.begin(), jets.end(), ranks_below);
}

JetRelation solve_for_jet(const RationalExpr& e, const JetSymbol& target) {
    Symbol t = Symbol::of(target);
    if (!e.contains(t))
        throw Error(Errc::TargetAbsent, to_string(target) + " does not occur in " + to_string(e));
    if (e.den().contains(t) || e.num().degree(t) != 1)
        throw Error(Errc::NotLinearInTarget, to_string(e) + " is not linear in " + to_string(target));
    auto cs = e.num().coefficients_in(t);
    RationalExpr rhs = -RationalExpr::fraction(cs[0], cs[1]);
    for (const JetSymbol& j : rhs.jets())
        if (!ranks_below(j, target))
            throw Error(Errc::NotLinearInTarget,
                        "solving for " + to_string(target) + " leaves the higher jet " + to_string(j));
    return {e, target, rhs};
}

JetRelation prolong(const JetRelation& rel, Var v) {
    return {rel.lhs.diff(v), rel.leading.derivative(v), reduce(rel.rhs.diff(v), {rel})};
}

RationalExpr reduce(const RationalExpr& target, const std::vector<JetRelation>& rels) {
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (std::size_t j = i + 1; j < rels.size(); ++j)
            if (rels[i].leading == rels[j].leading)
                throw Error(Errc::NonTermination, "two relations share the leading jet " + to_string(rels[i].leading));

    RationalExpr e = target;
    for (int pass = 0; pass < kMaxReductionPasses; ++pass) {
        bool changed = false;
        for (const JetRelation& rel : rels) {
            Symbol s = Symbol::of(rel.leading);
            if (e.contains(s)) {
                e = e.substitute(s, rel.rhs);
                changed = true;
            }
        }
        if (!changed)
            return e;
    }
    throw Error(Errc::NonTermination, "reduction did not terminate; the relation set is not triangular");
}

namespace {

const JetRelation* find_leading(const std::vector<JetRelation>& rels, const JetSymbol& j) {
    for (const auto& rel : rels)
        if (rel.leading == j)
            return &rel;
    return nullptr;
}

// a relation set member whose leading jet j strictly derives from, if any
const JetRelation* uncovered_base(const std::vector<JetRelation>& rels, const JetSymbol& j) {
    if (find_leading(rels, j))
        return nullptr;
    for (const auto& rel : rels)
        if (j.is_derivative_of(rel.leading))
            return &rel;
    return nullptr;
}

} // namespace

RationalExpr reduce_with_prolongations(const RationalExpr& target, std::vector<JetRelation>& rels,
                                       unsigned max_order) {
    for (;;) {
        RationalExpr e = reduce(target, rels);
        bool extended = false;
        for (const JetSymbol& j : e.jets()) {
            const JetRelation* base = uncovered_base(rels, j);
            if (!base)
                continue;
            if (j.order() > max_order)
                throw Error(Errc::NonTermination, "prolongation to " + to_string(j) + " exceeds order " +
                                                      std::to_string(max_order));
            JetRelation cur = *base;
            while (cur.leading != j) {
                cur = prolong(cur, cur.leading.dx < j.dx ? Var::X : Var::Y);
                if (const JetRelation* known = find_leading(rels, cur.leading))
                    cur = *known;
                else
                    rels.push_back(cur);
            }
            extended = true;
            break;
        }
        if (!extended)
            return e;
    }
}

RationalExpr transport_closure_residual(const LPDO& l, const RationalExpr& r0, const XTransport& formula) {
    DarbouxTriple t = x_darboux(l, r0);
    auto [h, k] = laplace_invariants(l);
    auto [h1, k1] = laplace_invariants(t.L1);
    RationalExpr r = RationalExpr::jet("r");

    RationalExpr relation = x_residual(r, h, k);
    std::vector<JetRelation> rels{solve_for_jet(relation, leading_jet(relation))};
    return reduce_with_prolongations(x_residual(formula(r, r0), h1, k1), rels);
}

bool verify_transport_closure(const LPDO& l, const RationalExpr& r0) {
    return transport_closure_residual(l, r0, transport_x_under_x).is_zero();
}

std::vector<JetRelation> kernel_relations(const LPDO& l) {
    auto [a, b, c] = hyperbolic_coeffs(l);
    RationalExpr z = RationalExpr::jet("z"), zx = RationalExpr::jet("z", 1, 0), zy = RationalExpr::jet("z", 0, 1);
    RationalExpr r = RationalExpr::jet("r"), q = RationalExpr::jet("q");
    return {
        solve_for_jet(RationalExpr::jet("z", 1, 1) + a * zx + b * zy + c * z, JetSymbol{"z", 1, 1}),
        solve_for_jet(zx + (b + r) * z, JetSymbol{"z", 1, 0}),
        solve_for_jet(zy + (a + q) * z, JetSymbol{"z", 0, 1}),
    };
}

PairInvariants symbolic_pair_image(const DarbouxTriple& t) {
    auto [a1, b1, c1] = hyperbolic_coeffs(t.L1);
    RationalExpr w;
    for (const auto& [idx, c] : t.M.coeffs())
        w += c * RationalExpr::jet("z", idx.first, idx.second);

    std::vector<JetRelation> rels = kernel_relations(t.L);
    RationalExpr wr = reduce_with_prolongations(w, rels);
    if (wr.is_zero())
        throw Error(Errc::GeneratorExcluded, "M maps the generic kernel element to zero");
    RationalExpr wx = reduce_with_prolongations(w.diff(Var::X), rels);
    RationalExpr wy = reduce_with_prolongations(w.diff(Var::Y), rels);
    return {-b1 - wx / wr, -a1 - wy / wr};
}

} // namespace lapinv
