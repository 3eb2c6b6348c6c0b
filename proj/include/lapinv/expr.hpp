#pragma once

#include <set>
#include <string>

#include "lapinv/polynomial.hpp"

namespace lapinv {

/// Element of Q(x, y, jets) in lowest terms.
///
/// Normal form: gcd(num, den) = 1, num and den have integer coefficients with
/// no common integer factor, and den has a positive leading coefficient. Two
/// values are equal iff their normal forms are identical.
class RationalExpr {
public:
    RationalExpr() : den_(1L) {}
    RationalExpr(long c) : num_(c), den_(1L) {}                  // NOLINT(google-explicit-constructor)
    RationalExpr(const Rational& c);                             // NOLINT(google-explicit-constructor)
    RationalExpr(Polynomial p);                                  // NOLINT(google-explicit-constructor)

    /// n / d in normal form. Throws DivisionByZero when d is zero.
    static RationalExpr fraction(const Polynomial& n, const Polynomial& d);
    static RationalExpr x() { return Polynomial::symbol(Symbol::x()); }
    static RationalExpr y() { return Polynomial::symbol(Symbol::y()); }
    static RationalExpr of(Var v) { return Polynomial::symbol(Symbol::of(v)); }
    static RationalExpr jet(const JetSymbol& j) { return Polynomial::symbol(Symbol::of(j)); }
    static RationalExpr jet(const std::string& func, unsigned dx = 0, unsigned dy = 0) {
        return jet(JetSymbol{func, dx, dy});
    }

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    /// Value of a constant expression.
    Rational constant_value() const;

    bool contains(const Symbol& s) const noexcept { return num_.contains(s) || den_.contains(s); }
    std::set<Symbol> symbols() const;
    std::set<JetSymbol> jets() const;

    /// Total derivative along v (quotient rule; jets shift their index).
    RationalExpr diff(Var v) const;
    /// Partial derivative in an indeterminate.
    RationalExpr partial(const Symbol& s) const;
    /// Replaces every occurrence of s by value.
    RationalExpr substitute(const Symbol& s, const RationalExpr& value) const;
    /// Throws DivisionByZero for negative exponents of zero.
    RationalExpr pow(int e) const;
    RationalExpr inverse() const;

    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator-(const RationalExpr& a);
    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
    RationalExpr& operator+=(const RationalExpr& o) { return *this = *this + o; }
    RationalExpr& operator-=(const RationalExpr& o) { return *this = *this - o; }
    RationalExpr& operator*=(const RationalExpr& o) { return *this = *this * o; }
    RationalExpr& operator/=(const RationalExpr& o) { return *this = *this / o; }
    friend bool operator==(const RationalExpr& a, const RationalExpr& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    // caller guarantees gcd(n, d) = 1
    static RationalExpr from_coprime(Polynomial n, Polynomial d);

    Polynomial num_;
    Polynomial den_;
};

/// prefactor * exp(exponent). Kernel elements of the hyperbolic operators live here.
///
/// A zero value is stored with exponent 0. Sums are only defined between
/// values with equal exponents (or zero); anything else raises ExpMixing.
class ExpRational {
public:
    ExpRational() = default;
    ExpRational(RationalExpr prefactor, RationalExpr exponent = {}); // NOLINT(google-explicit-constructor)
    ExpRational(long c) : ExpRational(RationalExpr(c)) {}           // NOLINT(google-explicit-constructor)

    static ExpRational exp(const RationalExpr& exponent) { return {RationalExpr(1L), exponent}; }

    const RationalExpr& prefactor() const noexcept { return prefactor_; }
    const RationalExpr& exponent() const noexcept { return exponent_; }
    bool is_zero() const noexcept { return prefactor_.is_zero(); }
    bool is_rational() const noexcept { return exponent_.is_zero(); }

    /// d/dv (R e^S) = (R_v + R S_v) e^S
    ExpRational diff(Var v) const;
    /// z_v / z, a rational expression. Throws ZeroFunction for z = 0.
    RationalExpr log_derivative(Var v) const;

    friend ExpRational operator+(const ExpRational& a, const ExpRational& b);
    friend ExpRational operator-(const ExpRational& a, const ExpRational& b);
    friend ExpRational operator-(const ExpRational& a);
    friend ExpRational operator*(const ExpRational& a, const ExpRational& b);
    friend ExpRational operator/(const ExpRational& a, const ExpRational& b);
    friend bool operator==(const ExpRational&, const ExpRational&) = default;

private:
    RationalExpr prefactor_;
    RationalExpr exponent_;
};

inline RationalExpr diff(const RationalExpr& e, Var v) { return e.diff(v); }
inline ExpRational diff(const ExpRational& e, Var v) { return e.diff(v); }
inline bool is_zero(const RationalExpr& e) { return e.is_zero(); }
inline bool is_zero(const ExpRational& e) { return e.is_zero(); }

/// Renders in the input grammar; parse(to_string(e)) == e.
std::string to_string(const RationalExpr& e);
std::string to_string(const ExpRational& e);

} // namespace lapinv
