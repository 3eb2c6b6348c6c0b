#include "lapinv/invariants.hpp"

#include "lapinv/error.hpp"

namespace lapinv {

HyperbolicCoeffs hyperbolic_coeffs(const LPDO& l) {
    if (!l.is_hyperbolic_normal())
        throw Error(Errc::NotNormalForm, "expected DxDy + a*Dx + b*Dy + c, got " + to_string(l));
    return {l.coeff(1, 0), l.coeff(0, 1), l.coeff(0, 0)};
}

LaplaceInvariants laplace_invariants(const LPDO& l) {
    auto [a, b, c] = hyperbolic_coeffs(l);
    RationalExpr ab = a * b;
    return {ab + a.diff(Var::X) - c, ab + b.diff(Var::Y) - c};
}

PairInvariants pair_invariants(const LPDO& l, const ExpRational& z) {
    auto [a, b, c] = hyperbolic_coeffs(l);
    if (z.is_zero())
        throw Error(Errc::ZeroFunction, "pair invariants need z != 0");
    if (!apply(l, z).is_zero())
        throw Error(Errc::NotInKernel, to_string(z) + " is not annihilated by " + to_string(l));
    return {-b - z.log_derivative(Var::X), -a - z.log_derivative(Var::Y)};
}

namespace {

// (ln f)_xy without logarithms
RationalExpr log_xy(const RationalExpr& f) {
    RationalExpr fx = f.diff(Var::X);
    return fx.diff(Var::Y) / f - fx * f.diff(Var::Y) / (f * f);
}

} // namespace

RationalExpr x_residual(const RationalExpr& r, const RationalExpr& h, const RationalExpr& k) {
    if (r.is_zero())
        throw Error(Errc::ZeroFunction, "X-invariants are nonzero");
    return h - k - r.diff(Var::Y) + (k / r).diff(Var::X) + log_xy(r);
}

RationalExpr y_residual(const RationalExpr& q, const RationalExpr& h, const RationalExpr& k) {
    if (q.is_zero())
        throw Error(Errc::ZeroFunction, "Y-invariants are nonzero");
    return h - k + q.diff(Var::X) - (h / q).diff(Var::Y) - log_xy(q);
}

RationalExpr compatibility_residual(const RationalExpr& r, const RationalExpr& q, const RationalExpr& h,
                                    const RationalExpr& k) {
    return r.diff(Var::Y) - q.diff(Var::X) - h + k;
}

namespace {

// F with F_v = f and F(v = from) = 0, for f polynomial in v with coefficients
// rational in the other base variable.
RationalExpr definite_integral(const RationalExpr& f, Var v, const Rational& from, const char* what) {
    const Symbol sv = Symbol::of(v);
    if (!f.jets().empty())
        throw Error(Errc::NonElementaryIntegral, std::string(what) + " contains unknown functions");
    if (f.den().contains(sv))
        throw Error(Errc::NonElementaryIntegral,
                    std::string(what) + " = " + to_string(f) + " is not polynomial in " + to_string(sv));
    std::vector<Polynomial> cs = f.num().coefficients_in(sv);
    std::vector<Polynomial> anti(cs.size() + 1);
    Rational from_pow = from; // from^(k+1)
    Polynomial at_from;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        Rational inv(1, static_cast<long>(k + 1));
        anti[k + 1] = cs[k].scaled(inv);
        at_from += cs[k].scaled(inv * from_pow);
        from_pow *= from;
    }
    anti[0] = -at_from;
    return RationalExpr::fraction(Polynomial::from_coefficients(sv, anti), f.den());
}

RationalExpr at_base(const RationalExpr& e, Var v, const Rational& value) {
    try {
        return e.substitute(Symbol::of(v), RationalExpr(value));
    } catch (const Error& err) {
        if (err.code() != Errc::DivisionByZero)
            throw;
        throw Error(Errc::SingularBasePoint, to_string(e) + " is singular at " + to_string(Symbol::of(v)) + " = " +
                                                 value.get_str() + "; choose another base point");
    }
}

} // namespace

ExpRational kernel_from_x_invariant(const LPDO& l, const RationalExpr& r, const BasePoint& base) {
    auto [a, b, c] = hyperbolic_coeffs(l);
    auto [h, k] = laplace_invariants(l);
    if (r.is_zero())
        throw Error(Errc::ZeroFunction, "X-invariants are nonzero");
    if (!x_residual(r, h, k).is_zero())
        throw Error(Errc::NotAnXInvariant, to_string(r) + " is not an X-invariant of " + to_string(l));

    RationalExpr along_x = -definite_integral(b + r, Var::X, base.x0, "b + r");
    RationalExpr a_coef = k / r + r.diff(Var::Y) / r + a;
    RationalExpr a_at_base = at_base(a_coef, Var::X, base.x0);
    RationalExpr along_y = -definite_integral(a_at_base, Var::Y, base.y0, "A(x0, y)");

    ExpRational z = ExpRational::exp(along_x + along_y);
    if (!apply(l, z).is_zero())
        throw Error(Errc::VerificationFailed, "reconstructed " + to_string(z) + " is not in the kernel");
    return z;
}

ExpRational kernel_from_y_invariant(const LPDO& l, const RationalExpr& q, const BasePoint& base) {
    auto [a, b, c] = hyperbolic_coeffs(l);
    auto [h, k] = laplace_invariants(l);
    if (q.is_zero())
        throw Error(Errc::ZeroFunction, "Y-invariants are nonzero");
    if (!y_residual(q, h, k).is_zero())
        throw Error(Errc::NotAYInvariant, to_string(q) + " is not a Y-invariant of " + to_string(l));

    RationalExpr along_y = -definite_integral(a + q, Var::Y, base.y0, "a + q");
    RationalExpr b_coef = h / q + q.diff(Var::X) / q + b;
    RationalExpr b_at_base = at_base(b_coef, Var::Y, base.y0);
    RationalExpr along_x = -definite_integral(b_at_base, Var::X, base.x0, "B(x, y0)");

    ExpRational z = ExpRational::exp(along_x + along_y);
    if (!apply(l, z).is_zero())
        throw Error(Errc::VerificationFailed, "reconstructed " + to_string(z) + " is not in the kernel");
    return z;
}

RationalExpr corresponding_y_invariant(const LPDO& l, const RationalExpr& r, const BasePoint& base) {
    return pair_invariants(l, kernel_from_x_invariant(l, r, base)).q;
}

RationalExpr corresponding_x_invariant(const LPDO& l, const RationalExpr& q, const BasePoint& base) {
    return pair_invariants(l, kernel_from_y_invariant(l, q, base)).r;
}

namespace {

Symbol swap_symbol(const Symbol& s) {
    switch (s.kind) {
    case Symbol::Kind::X: return Symbol::y();
    case Symbol::Kind::Y: return Symbol::x();
    case Symbol::Kind::Jet: return Symbol::of(JetSymbol{s.jet.func, s.jet.dy, s.jet.dx});
    }
    return s;
}

Polynomial swap_polynomial(const Polynomial& p) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        Monomial out;
        for (const auto& [s, e] : m.factors())
            out = out * Monomial(swap_symbol(s), e);
        terms.emplace_back(std::move(out), c);
    }
    return Polynomial::from_terms(std::move(terms));
}

} // namespace

RationalExpr swap_xy(const RationalExpr& e) {
    return RationalExpr::fraction(swap_polynomial(e.num()), swap_polynomial(e.den()));
}

LPDO swap_xy(const LPDO& l) {
    LPDO::Coeffs out;
    for (const auto& [idx, c] : l.coeffs())
        out.emplace(DIndex{idx.second, idx.first}, swap_xy(c));
    return LPDO::from_coeffs(std::move(out));
}

} // namespace lapinv
