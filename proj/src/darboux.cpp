#include "lapinv/darboux.hpp"

#include <array>
#include <map>

#include "lapinv/error.hpp"
#include "lapinv/invariants.hpp"

namespace lapinv {

namespace {

// '#' cannot occur in parsed input, so these never collide with user functions
const std::array<std::string, 4> kUnknowns = {"#a1", "#b1", "#c1", "#m"};

Symbol unknown(const std::string& name) { return Symbol::of(JetSymbol{name}); }

// Dx^2Dy, DxDy^2, Dx^2, DxDy, Dy^2, Dx, Dy, 1
std::vector<DIndex> equation_order() {
    std::vector<DIndex> out;
    for (int total = LPDO::kMaxOrder; total >= 0; --total)
        for (int i = total; i >= 0; --i)
            out.emplace_back(i, total - i);
    return out;
}

// u = -rest / coeff when e = coeff * u + rest with coeff, rest free of u
std::optional<RationalExpr> solve_linear(const RationalExpr& e, const Symbol& u) {
    if (!e.num().contains(u) || e.den().contains(u))
        return std::nullopt;
    auto cs = e.num().coefficients_in(u);
    if (cs.size() != 2)
        return std::nullopt;
    return -RationalExpr::fraction(cs[0], cs[1]);
}

DarbouxTriple solve_intertwining(const LPDO& l, const LPDO& m, DarbouxKind kind, bool unsafe) {
    RationalExpr a1 = RationalExpr::jet(kUnknowns[0]), b1 = RationalExpr::jet(kUnknowns[1]),
                 c1 = RationalExpr::jet(kUnknowns[2]), mm = RationalExpr::jet(kUnknowns[3]);
    LPDO l1 = LPDO::hyperbolic(a1, b1, c1);
    LPDO m1 = (kind == DarbouxKind::X ? LPDO::dx() : LPDO::dy()) + LPDO(mm);
    LPDO res = residual(m1, l, l1, m);

    std::map<DIndex, RationalExpr, DIndexOrder> equations(res.coeffs().begin(), res.coeffs().end());
    std::vector<SolveStep> steps;
    std::map<std::string, RationalExpr> solved;

    for (const std::string& name : kUnknowns) {
        Symbol u = unknown(name);
        bool found = false;
        for (DIndex idx : equation_order()) {
            auto it = equations.find(idx);
            if (it == equations.end())
                continue;
            auto value = solve_linear(it->second, u);
            if (!value)
                continue;
            for (auto& [other, e] : equations)
                e = e.substitute(u, *value);
            for (auto& [prev, v] : solved)
                v = v.substitute(u, *value);
            equations.erase(idx);
            solved.emplace(name, *value);
            steps.push_back({name, idx});
            found = true;
            break;
        }
        if (!found)
            throw Error(Errc::VerificationFailed, "coefficient matching left " + name.substr(1) + " undetermined");
    }

    for (const auto& [idx, e] : equations)
        if (!e.is_zero() && !unsafe)
            throw Error(Errc::VerificationFailed, "intertwining relation fails at Dx^" + std::to_string(idx.first) +
                                                      " Dy^" + std::to_string(idx.second) + ": " + to_string(e));

    DarbouxTriple t;
    t.L = l;
    t.M = m;
    t.L1 = LPDO::hyperbolic(solved.at(kUnknowns[0]), solved.at(kUnknowns[1]), solved.at(kUnknowns[2]));
    t.M1 = (kind == DarbouxKind::X ? LPDO::dx() : LPDO::dy()) + LPDO(solved.at(kUnknowns[3]));
    t.kind = kind;
    t.steps = std::move(steps);
    for (auto& s : t.steps)
        s.unknown = s.unknown.substr(1);
    return t;
}

} // namespace

DarbouxTriple x_darboux(const LPDO& l, const RationalExpr& r0, const DarbouxOptions& opts) {
    auto [a, b, c] = hyperbolic_coeffs(l);
    if (r0.is_zero())
        throw Error(Errc::ZeroInvariant, "r0 must be nonzero");
    if (!opts.unsafe) {
        auto [h, k] = laplace_invariants(l);
        if (!x_residual(r0, h, k).is_zero())
            throw Error(Errc::NotAnXInvariant, to_string(r0) + " is not an X-invariant of " + to_string(l));
    }
    return solve_intertwining(l, LPDO::dx() + LPDO(r0 + b), DarbouxKind::X, opts.unsafe);
}

DarbouxTriple y_darboux(const LPDO& l, const RationalExpr& q0, const DarbouxOptions& opts) {
    auto [a, b, c] = hyperbolic_coeffs(l);
    if (q0.is_zero())
        throw Error(Errc::ZeroInvariant, "q0 must be nonzero");
    if (!opts.unsafe) {
        auto [h, k] = laplace_invariants(l);
        if (!y_residual(q0, h, k).is_zero())
            throw Error(Errc::NotAYInvariant, to_string(q0) + " is not a Y-invariant of " + to_string(l));
    }
    return solve_intertwining(l, LPDO::dy() + LPDO(q0 + a), DarbouxKind::Y, opts.unsafe);
}

ExpRational kernel_map(const DarbouxTriple& t, const ExpRational& z) {
    if (!apply(t.L, z).is_zero())
        throw Error(Errc::NotInKernel, to_string(z) + " is not annihilated by " + to_string(t.L));
    ExpRational w = apply(t.M, z);
    if (!apply(t.L1, w).is_zero())
        throw Error(Errc::VerificationFailed, "M(z) is not in the kernel of L1");
    return w;
}

std::string to_string(DarbouxKind k) { return k == DarbouxKind::X ? "X" : "Y"; }

} // namespace lapinv
