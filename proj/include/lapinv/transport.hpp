#pragma once

#include "lapinv/expr.hpp"

namespace lapinv {

// r, q may be concrete or contain the jets of an unknown invariant.

/// Image of an X-invariant under the X-transformation generated by r0:
///     r + (r / r0)_x * r0 / (r0 - r).
/// Throws ZeroInvariant for r0 = 0 and GeneratorExcluded for r = r0.
RationalExpr transport_x_under_x(const RationalExpr& r, const RationalExpr& r0);
/// q + (q / q0)_y * q0 / (q0 - q), the mirror image.
RationalExpr transport_y_under_y(const RationalExpr& q, const RationalExpr& q0);

/// Image of the X-invariant r (paired with the Y-invariant q) under the
/// Y-transformation generated by q0:  -(q0_x + h - q0 r) / (q0 - q).
RationalExpr transport_x_under_y(const RationalExpr& r, const RationalExpr& q, const RationalExpr& q0,
                                 const RationalExpr& h);

/// Mirror of transport_x_under_y, obtained by x <-> y, a <-> b, h <-> k:
///     -(r0_y + k - r0 q) / (r0 - r).
/// An extension by symmetry; strict mode rejects it with StrictMode.
RationalExpr transport_y_under_x(const RationalExpr& q, const RationalExpr& r, const RationalExpr& r0,
                                 const RationalExpr& k, bool strict = false);

} // namespace lapinv
