#include "lapinv/expr.hpp"

#include <cassert>

#include "lapinv/error.hpp"

namespace lapinv {

RationalExpr::RationalExpr(const Rational& c) : num_(c), den_(1L) {
    if (c != 0)
        *this = from_coprime(num_, den_);
}

RationalExpr::RationalExpr(Polynomial p) : num_(std::move(p)), den_(1L) {
    if (!num_.is_zero())
        *this = from_coprime(num_, den_);
}

RationalExpr RationalExpr::from_coprime(Polynomial n, Polynomial d) {
    RationalExpr out;
    if (d.is_zero())
        throw Error(Errc::DivisionByZero, "zero denominator");
    if (n.is_zero())
        return out;
    // joint integer content of (n, d), sign fixed by den's leading coefficient
    Rational cn = n.rational_content(), cd = d.rational_content();
    Integer g, l;
    mpz_gcd(g.get_mpz_t(), cn.get_num_mpz_t(), cd.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), cn.get_den_mpz_t(), cd.get_den_mpz_t());
    Rational scale(l, g);
    scale.canonicalize();
    if (d.leading_coefficient() < 0)
        scale = -scale;
    out.num_ = n.scaled(scale);
    out.den_ = d.scaled(scale);
    return out;
}

RationalExpr RationalExpr::fraction(const Polynomial& n, const Polynomial& d) {
    if (d.is_zero())
        throw Error(Errc::DivisionByZero, "division by the zero expression");
    if (n.is_zero())
        return {};
    if (d.is_constant())
        return from_coprime(n, d);
    Polynomial g = gcd(n, d);
    if (g.is_constant())
        return from_coprime(n, d);
    return from_coprime(*divide_exact(n, g), *divide_exact(d, g));
}

Rational RationalExpr::constant_value() const {
    assert(is_constant());
    return num_.constant_term() / den_.constant_term();
}

std::set<Symbol> RationalExpr::symbols() const {
    auto s = num_.symbols();
    s.merge(den_.symbols());
    return s;
}

std::set<JetSymbol> RationalExpr::jets() const {
    std::set<JetSymbol> out;
    for (const auto& s : symbols())
        if (s.is_jet())
            out.insert(s.jet);
    return out;
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_constant())
            return RationalExpr::from_coprime(a.num_ + b.num_, a.den_);
        return RationalExpr::fraction(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_constant() || b.den_.is_constant()) {
        // n1/d1 + n2/d2 with one denominator a unit stays coprime
        Polynomial n = a.num_ * b.den_ + b.num_ * a.den_;
        return RationalExpr::from_coprime(std::move(n), a.den_ * b.den_);
    }
    Polynomial g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        Polynomial n = a.num_ * b.den_ + b.num_ * a.den_;
        return RationalExpr::from_coprime(std::move(n), a.den_ * b.den_);
    }
    Polynomial da = *divide_exact(a.den_, g);
    Polynomial db = *divide_exact(b.den_, g);
    Polynomial n = a.num_ * db + b.num_ * da;
    Polynomial d = a.den_ * db;
    Polynomial g2 = gcd(n, g);
    if (!g2.is_constant()) {
        n = *divide_exact(n, g2);
        d = *divide_exact(d, g2);
    }
    return RationalExpr::from_coprime(std::move(n), std::move(d));
}

RationalExpr operator-(const RationalExpr& a) {
    RationalExpr out = a;
    out.num_ = -out.num_;
    return out;
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    Polynomial g1 = gcd(a.num_, b.den_);
    Polynomial g2 = gcd(b.num_, a.den_);
    Polynomial n1 = g1.is_constant() ? a.num_ : *divide_exact(a.num_, g1);
    Polynomial d2 = g1.is_constant() ? b.den_ : *divide_exact(b.den_, g1);
    Polynomial n2 = g2.is_constant() ? b.num_ : *divide_exact(b.num_, g2);
    Polynomial d1 = g2.is_constant() ? a.den_ : *divide_exact(a.den_, g2);
    return RationalExpr::from_coprime(n1 * n2, d1 * d2);
}

RationalExpr RationalExpr::inverse() const {
    if (is_zero())
        throw Error(Errc::DivisionByZero, "division by the zero expression");
    return from_coprime(den_, num_);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) { return a * b.inverse(); }

RationalExpr RationalExpr::pow(int e) const {
    if (e < 0)
        return inverse().pow(-e);
    if (e == 0)
        return RationalExpr(1L);
    return from_coprime(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalExpr RationalExpr::diff(Var v) const {
    if (den_.is_constant())
        return from_coprime(num_.diff(v), den_);
    Polynomial dd = den_.diff(v);
    if (dd.is_zero())
        return fraction(num_.diff(v), den_);
    // (n/d)' = (n' d - n d') / d^2; cancel gcd(d, d') before squaring
    Polynomial g = gcd(den_, dd);
    Polynomial d_over_g = *divide_exact(den_, g);
    Polynomial dd_over_g = *divide_exact(dd, g);
    Polynomial n = num_.diff(v) * d_over_g - num_ * dd_over_g;
    return fraction(n, den_ * d_over_g);
}

RationalExpr RationalExpr::partial(const Symbol& s) const {
    if (!contains(s))
        return {};
    Polynomial dn = num_.partial(s), dd = den_.partial(s);
    return fraction(dn * den_ - num_ * dd, den_ * den_);
}

RationalExpr RationalExpr::substitute(const Symbol& s, const RationalExpr& value) const {
    if (!contains(s))
        return *this;
    std::vector<Polynomial> cn = num_.coefficients_in(s);
    std::vector<Polynomial> cd = den_.coefficients_in(s);
    const std::size_t top = std::max(cn.size(), cd.size()) - 1;
    const Polynomial& p = value.num_;
    const Polynomial& q = value.den_;
    // sum_k c_k p^k q^(top-k)
    std::vector<Polynomial> ppow{Polynomial(1L)}, qpow{Polynomial(1L)};
    for (std::size_t k = 1; k <= top; ++k) {
        ppow.push_back(ppow.back() * p);
        qpow.push_back(qpow.back() * q);
    }
    auto homogenize = [&](const std::vector<Polynomial>& c) {
        Polynomial acc;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!c[k].is_zero())
                acc += c[k] * ppow[k] * qpow[top - k];
        return acc;
    };
    Polynomial n = homogenize(cn);
    Polynomial d = homogenize(cd);
    if (d.is_zero())
        throw Error(Errc::DivisionByZero, "substitution makes the denominator vanish");
    return fraction(n, d);
}

// ---------------------------------------------------------------------------

ExpRational::ExpRational(RationalExpr prefactor, RationalExpr exponent)
    : prefactor_(std::move(prefactor)), exponent_(std::move(exponent)) {
    if (prefactor_.is_zero())
        exponent_ = RationalExpr{};
}

ExpRational ExpRational::diff(Var v) const {
    if (is_zero())
        return {};
    return {prefactor_.diff(v) + prefactor_ * exponent_.diff(v), exponent_};
}

RationalExpr ExpRational::log_derivative(Var v) const {
    if (is_zero())
        throw Error(Errc::ZeroFunction, "logarithmic derivative of the zero function");
    return prefactor_.diff(v) / prefactor_ + exponent_.diff(v);
}

ExpRational operator+(const ExpRational& a, const ExpRational& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.exponent_ != b.exponent_)
        throw Error(Errc::ExpMixing, "sum of exponential terms with different exponents");
    return {a.prefactor_ + b.prefactor_, a.exponent_};
}

ExpRational operator-(const ExpRational& a) { return {-a.prefactor_, a.exponent_}; }

ExpRational operator-(const ExpRational& a, const ExpRational& b) { return a + (-b); }

ExpRational operator*(const ExpRational& a, const ExpRational& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    return {a.prefactor_ * b.prefactor_, a.exponent_ + b.exponent_};
}

ExpRational operator/(const ExpRational& a, const ExpRational& b) {
    if (b.is_zero())
        throw Error(Errc::DivisionByZero, "division by the zero function");
    if (a.is_zero())
        return {};
    return {a.prefactor_ / b.prefactor_, a.exponent_ - b.exponent_};
}

// ---------------------------------------------------------------------------

namespace {

bool is_bare_power(const Polynomial& p) {
    return p.terms().size() == 1 && p.leading_coefficient() == 1 && p.leading_monomial().factors().size() == 1;
}

} // namespace

std::string to_string(const RationalExpr& e) {
    if (e.den().is_constant())
        return to_string(e.num().scaled(1 / e.den().constant_term()));
    std::string n = to_string(e.num());
    if (e.num().terms().size() > 1)
        n = "(" + n + ")";
    std::string d = to_string(e.den());
    if (!is_bare_power(e.den()))
        d = "(" + d + ")";
    return n + "/" + d;
}

std::string to_string(const ExpRational& e) {
    if (e.is_rational())
        return to_string(e.prefactor());
    std::string s = "exp(" + to_string(e.exponent()) + ")";
    if (e.prefactor() == RationalExpr(1L))
        return s;
    return "(" + to_string(e.prefactor()) + ")*" + s;
}

} // namespace lapinv
