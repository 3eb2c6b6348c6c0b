// Multivariate gcd over Q: monomial content, recursive content in a main
// variable, and a primitive pseudo-remainder sequence on the primitive parts.

#include <algorithm>
#include <cstdint>
#include <map>

#include "lapinv/polynomial.hpp"

namespace lapinv {

namespace {

using UPoly = std::vector<Polynomial>; // coefficients in the main variable, low degree first

void trim(UPoly& u) {
    while (!u.empty() && u.back().is_zero())
        u.pop_back();
}

Polynomial content(const UPoly& u) {
    Polynomial g;
    for (const auto& c : u) {
        if (c.is_zero())
            continue;
        g = g.is_zero() ? c.primitive() : gcd(g, c);
        if (g.is_constant())
            return Polynomial(1L);
    }
    return g;
}

UPoly divide_all(const UPoly& u, const Polynomial& d) {
    if (d.is_one())
        return u;
    UPoly out;
    out.reserve(u.size());
    for (const auto& c : u)
        out.push_back(*divide_exact(c, d));
    return out;
}

UPoly primitive_part(const UPoly& u) {
    UPoly out = divide_all(u, content(u));
    // fix the overall sign/scale by the leading coefficient in the main variable
    Rational s = out.back().rational_content();
    if (out.back().leading_coefficient() < 0)
        s = -s;
    if (s != 1)
        for (auto& c : out)
            c = c.scaled(1 / s);
    return out;
}

// Pseudo-remainder of a by b in the main variable; deg(a) >= deg(b) >= 1.
UPoly pseudo_remainder(UPoly r, const UPoly& b) {
    const std::size_t db = b.size() - 1;
    const Polynomial& lb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - 1 - db;
        Polynomial lr = r.back();
        for (auto& c : r)
            c = c * lb;
        for (std::size_t i = 0; i <= db; ++i)
            r[i + shift] -= lr * b[i];
        r.pop_back();
        trim(r);
    }
    return r;
}

Rational evaluate(const Polynomial& p, const std::map<Symbol, Rational>& point) {
    Rational acc = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (const auto& [s, e] : m.factors()) {
            const Rational& v = point.at(s);
            for (unsigned k = 0; k < e; ++k)
                t *= v;
        }
        acc += t;
    }
    return acc;
}

std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    auto strip = [](std::vector<Rational>& u) {
        while (!u.empty() && u.back() == 0)
            u.pop_back();
    };
    strip(a);
    strip(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size()) {
            Rational f = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] -= f * b[i];
            a.pop_back();
            strip(a);
        }
        std::swap(a, b);
    }
    return a;
}

// True when gcd(a, b) provably has degree 0 in v: both are specialized at an
// integer point of the remaining symbols that keeps the leading coefficients
// nonzero, and the univariate images are coprime.
bool coprime_in(const UPoly& a, const UPoly& b, const std::set<Symbol>& others) {
    std::uint64_t state = 0x9E3779B97F4A7C15ULL;
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::map<Symbol, Rational> point;
        for (const auto& s : others) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            point.emplace(s, Rational(static_cast<long>((state >> 33) % 23) - 11));
        }
        if (evaluate(a.back(), point) == 0 || evaluate(b.back(), point) == 0)
            continue;
        std::vector<Rational> ua, ub;
        for (const auto& c : a)
            ua.push_back(evaluate(c, point));
        for (const auto& c : b)
            ub.push_back(evaluate(c, point));
        return univariate_gcd(std::move(ua), std::move(ub)).size() == 1;
    }
    return false;
}

Polynomial gcd_stripped(const Polynomial& a, const Polynomial& b);

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero())
        return b.primitive();
    if (b.is_zero())
        return a.primitive();
    if (a.is_constant() || b.is_constant())
        return Polynomial(1L);
    Monomial ma = a.monomial_content();
    Monomial mb = b.monomial_content();
    Polynomial g = gcd_stripped(a.divide_monomial(ma).primitive(), b.divide_monomial(mb).primitive());
    Monomial mg = gcd(ma, mb);
    return mg.is_one() ? g : Polynomial(mg) * g;
}

namespace {

Polynomial gcd_stripped(const Polynomial& a, const Polynomial& b) {
    if (a.is_constant() || b.is_constant())
        return Polynomial(1L);
    if (a == b)
        return a;

    std::set<Symbol> sa = a.symbols(), sb = b.symbols();
    for (const auto& s : sa)
        if (!sb.contains(s))
            return gcd(content(a.coefficients_in(s)), b);
    for (const auto& s : sb)
        if (!sa.contains(s))
            return gcd(a, content(b.coefficients_in(s)));

    if (a.terms().size() >= b.terms().size()) {
        if (divide_exact(a, b))
            return b;
    } else if (divide_exact(b, a)) {
        return a;
    }

    // main variable: smallest degree keeps the remainder sequence short
    Symbol v = *sa.begin();
    unsigned best = ~0U;
    for (const auto& s : sa) {
        unsigned d = std::max(a.degree(s), b.degree(s));
        if (d < best) {
            best = d;
            v = s;
        }
    }

    UPoly ua = a.coefficients_in(v);
    UPoly ub = b.coefficients_in(v);
    std::set<Symbol> others = sa;
    others.erase(v);

    Polynomial ca = content(ua);
    Polynomial cb = content(ub);
    Polynomial c = gcd(ca, cb);
    if (coprime_in(ua, ub, others))
        return c;

    UPoly pa = primitive_part(ua);
    UPoly pb = primitive_part(ub);
    if (pa.size() < pb.size())
        std::swap(pa, pb);
    while (true) {
        UPoly r = pseudo_remainder(pa, pb);
        if (r.empty())
            break;
        if (r.size() == 1)
            return c;
        pa = std::move(pb);
        pb = primitive_part(r);
    }
    return (c * Polynomial::from_coefficients(v, pb)).primitive();
}

} // namespace

} // namespace lapinv
