#pragma once

#include "lapinv/expr.hpp"
#include "lapinv/lpdo.hpp"

namespace lapinv {

/// Coefficients (a, b, c) of DxDy + a Dx + b Dy + c.
struct HyperbolicCoeffs {
    RationalExpr a, b, c;
};

/// Throws NotNormalForm unless l.is_hyperbolic_normal() and every other
/// coefficient is zero.
HyperbolicCoeffs hyperbolic_coeffs(const LPDO& l);

/// Laplace invariants h = ab + a_x - c, k = ab + b_y - c.
struct LaplaceInvariants {
    RationalExpr h, k;
    friend bool operator==(const LaplaceInvariants&, const LaplaceInvariants&) = default;
};

/// Gauge invariants of a pair (L, z): r = -b - z_x/z, q = -a - z_y/z.
struct PairInvariants {
    RationalExpr r, q;
    friend bool operator==(const PairInvariants&, const PairInvariants&) = default;
};

/// Base point of the definite integrals used to rebuild a kernel element.
struct BasePoint {
    Rational x0 = 0;
    Rational y0 = 0;
};

LaplaceInvariants laplace_invariants(const LPDO& l);

/// Throws ZeroFunction for z = 0 and NotInKernel unless L(z) = 0.
PairInvariants pair_invariants(const LPDO& l, const ExpRational& z);

/// h - k - r_y + (k/r)_x + (ln r)_xy, with (ln r)_xy = (r_xy r - r_x r_y)/r^2.
/// Vanishes iff r is an X-invariant. r may be a jet expression. Throws ZeroFunction for r = 0.
RationalExpr x_residual(const RationalExpr& r, const RationalExpr& h, const RationalExpr& k);
/// h - k + q_x - (h/q)_y - (ln q)_xy; vanishes iff q is a Y-invariant.
RationalExpr y_residual(const RationalExpr& q, const RationalExpr& h, const RationalExpr& k);
/// r_y - q_x - h + k; zero for corresponding X/Y-invariants.
RationalExpr compatibility_residual(const RationalExpr& r, const RationalExpr& q, const RationalExpr& h,
                                    const RationalExpr& k);

/// Rebuilds z in Ker L with r = -b - z_x/z as
///     z = f(y) exp(-int_{x0}^{x} (b + r) dx),   f_y + f A(x0, y) = 0,   A = k/r + r_y/r + a,
/// normalized by z(x0, y0) = 1. Integrands must be polynomial in the integration
/// variable (NonElementaryIntegral otherwise); A singular at x = x0 raises
/// SingularBasePoint; r = 0 raises ZeroFunction; a non-invariant r raises NotAnXInvariant.
ExpRational kernel_from_x_invariant(const LPDO& l, const RationalExpr& r, const BasePoint& base = {});
/// z = g(x) exp(-int_{y0}^{y} (a + q) dy) with g_x + g B(x, y0) = 0, B = h/q + q_x/q + b.
ExpRational kernel_from_y_invariant(const LPDO& l, const RationalExpr& q, const BasePoint& base = {});

/// The Y-invariant paired with the X-invariant r through their common kernel element.
RationalExpr corresponding_y_invariant(const LPDO& l, const RationalExpr& r, const BasePoint& base = {});
RationalExpr corresponding_x_invariant(const LPDO& l, const RationalExpr& q, const BasePoint& base = {});

/// Mirror image under x <-> y (jets swap their derivative indices).
RationalExpr swap_xy(const RationalExpr& e);
/// Mirror of an operator: coefficient of Dx^i Dy^j moves to Dx^j Dy^i.
LPDO swap_xy(const LPDO& l);

} // namespace lapinv
