#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"

#include "lapinv/expr.hpp"
#include "lapinv/parse.hpp"

namespace lapinv {

/// Exponent pair (i, j) of Dx^i Dy^j.
using DIndex = std::pair<unsigned, unsigned>;

/// Highest total order first, then higher Dx power first: DxDy, Dx, Dy, 1.
struct DIndexOrder {
    bool operator()(const DIndex& a, const DIndex& b) const noexcept {
        unsigned oa = a.first + a.second, ob = b.first + b.second;
        if (oa != ob)
            return oa > ob;
        return a.first > b.first;
    }
};

/// Linear partial differential operator sum a_ij Dx^i Dy^j with coefficients in
/// Q(x, y, jets). Stored sparsely without zero coefficients; the zero operator
/// is the empty map. Orders above kMaxOrder raise UnsupportedOrder.
class LPDO {
public:
    static constexpr unsigned kMaxOrder = 4;
    using Coeffs = std::map<DIndex, RationalExpr, DIndexOrder>;

    LPDO() = default;
    /// Multiplication by a function.
    LPDO(const RationalExpr& scalar); // NOLINT(google-explicit-constructor)
    LPDO(long scalar) : LPDO(RationalExpr(scalar)) {} // NOLINT(google-explicit-constructor)

    static LPDO from_coeffs(Coeffs coeffs);
    /// Dx^i Dy^j
    static LPDO derivation(unsigned i, unsigned j);
    static LPDO dx() { return derivation(1, 0); }
    static LPDO dy() { return derivation(0, 1); }
    /// DxDy + a Dx + b Dy + c
    static LPDO hyperbolic(const RationalExpr& a, const RationalExpr& b, const RationalExpr& c);

    const Coeffs& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of Dx^i Dy^j (zero if absent).
    RationalExpr coeff(unsigned i, unsigned j) const;
    unsigned order() const noexcept;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// coeff(1,1) = 1, coeff(2,0) = coeff(0,2) = 0 and order 2.
    bool is_hyperbolic_normal() const;

    friend LPDO operator+(const LPDO& a, const LPDO& b);
    friend LPDO operator-(const LPDO& a, const LPDO& b);
    friend LPDO operator-(const LPDO& a);
    friend bool operator==(const LPDO&, const LPDO&) = default;

private:
    Coeffs coeffs_;
};

/// P ∘ Q via the Leibniz rule.
LPDO compose(const LPDO& p, const LPDO& q);
ExpRational apply(const LPDO& p, const ExpRational& f);
/// g^-1 ∘ L ∘ g. Throws DivisionByZero for g = 0.
LPDO gauge(const LPDO& l, const RationalExpr& g);
/// M1 ∘ L - L1 ∘ M; zero exactly when the intertwining relation holds.
LPDO residual(const LPDO& m1, const LPDO& l, const LPDO& l1, const LPDO& m);

/// Principal symbol: sum of a_ij X^i Y^j over i + j = order.
struct PrincipalSymbol {
    unsigned degree = 0;
    LPDO::Coeffs coeffs;

    friend bool operator==(const PrincipalSymbol&, const PrincipalSymbol&) = default;
};

PrincipalSymbol symbol(const LPDO& l);
std::string to_string(const PrincipalSymbol& s);

/// `DxDy + (a)*Dx + (b)*Dy + (c)`
std::string to_string(const LPDO& l);
/// Reads the operator text form; `*` composes, so `Dx*x` is x Dx + 1.
LPDO parse_operator(std::string_view text, const ParseOptions& opts = {});
/// {"coeffs": {"i,j": "<expr>", ...}}
nlohmann::json to_json(const LPDO& l);
LPDO lpdo_from_json(const nlohmann::json& j, const ParseOptions& opts = {});

} // namespace lapinv
