#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lapinv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Independent variables of the plane.
enum class Var : std::uint8_t { X, Y };

/// An unknown function together with a derivative multi-index: r, r_x, r_xy, ...
struct JetSymbol {
    std::string func;
    unsigned dx = 0;
    unsigned dy = 0;

    unsigned order() const noexcept { return dx + dy; }
    /// The jet obtained by one more derivative in `v`.
    JetSymbol derivative(Var v) const;
    /// True if this jet is a (possibly trivial) derivative of `base` (same func, componentwise >=).
    bool is_derivative_of(const JetSymbol& base) const noexcept;

    friend bool operator==(const JetSymbol&, const JetSymbol&) = default;
    // func name, then total order, then dx
    friend std::strong_ordering operator<=>(const JetSymbol& a, const JetSymbol& b);
};

std::string to_string(const JetSymbol& j);

/// A polynomial indeterminate: one of the base variables x, y, or a jet.
struct Symbol {
    enum class Kind : std::uint8_t { X, Y, Jet };
    Kind kind = Kind::X;
    JetSymbol jet;

    static Symbol x() { return {Kind::X, {}}; }
    static Symbol y() { return {Kind::Y, {}}; }
    static Symbol of(Var v) { return v == Var::X ? x() : y(); }
    static Symbol of(JetSymbol j) { return {Kind::Jet, std::move(j)}; }

    bool is_jet() const noexcept { return kind == Kind::Jet; }

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);
};

std::string to_string(const Symbol& s);

/// Power product, kept sorted by Symbol with strictly positive exponents.
class Monomial {
public:
    using Factor = std::pair<Symbol, unsigned>;

    Monomial() = default;
    explicit Monomial(Symbol s, unsigned e = 1);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    unsigned total_degree() const noexcept { return degree_; }
    unsigned degree(const Symbol& s) const noexcept;

    /// Returns this / other if other divides this.
    std::optional<Monomial> divide(const Monomial& other) const;
    /// Removes `s` entirely.
    Monomial without(const Symbol& s) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.factors_ == b.factors_;
    }

private:
    std::vector<Factor> factors_;
    unsigned degree_ = 0;
};

/// Graded order: higher total degree first, ties broken lexicographically with
/// earlier symbols weighing more. Returns true if a sorts strictly before b.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial over Q. Terms are stored leading-first in
/// TermOrder with no zero coefficients, so equality is structural.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(long c);                // NOLINT(google-explicit-constructor)
    Polynomial(const Rational& c);     // NOLINT(google-explicit-constructor)
    explicit Polynomial(Monomial m, Rational c = 1);
    static Polynomial symbol(const Symbol& s);
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const;
    /// Constant term value (0 when absent).
    Rational constant_term() const;
    const Rational& leading_coefficient() const;
    const Monomial& leading_monomial() const;

    unsigned total_degree() const noexcept;
    unsigned degree(const Symbol& s) const noexcept;
    bool contains(const Symbol& s) const noexcept;
    std::set<Symbol> symbols() const;

    /// Coefficients with respect to `s`: result[k] multiplies s^k.
    std::vector<Polynomial> coefficients_in(const Symbol& s) const;
    static Polynomial from_coefficients(const Symbol& s, const std::vector<Polynomial>& coeffs);

    /// Total derivative along `v`: jets shift their multi-index.
    Polynomial diff(Var v) const;
    /// Partial derivative treating `s` as an independent indeterminate.
    Polynomial partial(const Symbol& s) const;

    Polynomial pow(unsigned e) const;
    /// Greatest monomial dividing every term.
    Monomial monomial_content() const;
    Polynomial divide_monomial(const Monomial& m) const;
    Polynomial scaled(const Rational& c) const;
    /// Integer-primitive associate with positive leading coefficient; zero stays zero.
    Polynomial primitive() const;
    /// Positive rational c such that (*this / c) has coprime integer coefficients.
    Rational rational_content() const;
    Polynomial eval(const Symbol& s, const Rational& value) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    std::vector<Term> terms_;
};

/// a / b when b divides a exactly, std::nullopt otherwise. b must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);
/// Greatest common divisor, normalized by Polynomial::primitive (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& p);

} // namespace lapinv
