#pragma once

#include <string>
#include <vector>

#include "lapinv/lpdo.hpp"

namespace lapinv {

enum class DarbouxKind { X, Y };

/// One step of the coefficient-matching solve: `unknown` was isolated from the
/// coefficient of Dx^i Dy^j in M1 L - L1 M.
struct SolveStep {
    std::string unknown;
    DIndex equation;
};

/// M1 ∘ L = L1 ∘ M with first-order M, M1 of the same principal symbol.
struct DarbouxTriple {
    LPDO L;
    LPDO L1;
    LPDO M;
    LPDO M1;
    DarbouxKind kind = DarbouxKind::X;
    /// In solve order a1, b1, c1, m; each unknown appears once.
    std::vector<SolveStep> steps;
};

struct DarbouxOptions {
    /// Skip the invariant check on r0 / q0. The triple is returned even if the
    /// intertwining relation then fails.
    bool unsafe = false;
};

/// M = Dx + r0 + b, M1 = Dx + m, L1 = DxDy + a1 Dx + b1 Dy + c1, solved from the
/// coefficients of M1 L - L1 M. Closed form: m = r0 + b - r0_x / r0, a1 = a.
/// Throws NotNormalForm, ZeroInvariant, NotAnXInvariant.
DarbouxTriple x_darboux(const LPDO& l, const RationalExpr& r0, const DarbouxOptions& opts = {});
/// M = Dy + q0 + a, M1 = Dy + m with m = q0 + a - q0_y / q0, b1 = b.
DarbouxTriple y_darboux(const LPDO& l, const RationalExpr& q0, const DarbouxOptions& opts = {});

/// M(z), an element of Ker L1. Zero for the z that generated the step.
/// Throws NotInKernel unless L(z) = 0.
ExpRational kernel_map(const DarbouxTriple& t, const ExpRational& z);

std::string to_string(DarbouxKind k);

} // namespace lapinv
