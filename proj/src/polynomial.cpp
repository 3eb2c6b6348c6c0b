#include "lapinv/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "lapinv/error.hpp"

namespace lapinv {

// ---------------------------------------------------------------------------
// Symbols

JetSymbol JetSymbol::derivative(Var v) const {
    JetSymbol d = *this;
    (v == Var::X ? d.dx : d.dy) += 1;
    return d;
}

bool JetSymbol::is_derivative_of(const JetSymbol& base) const noexcept {
    return func == base.func && dx >= base.dx && dy >= base.dy;
}

std::strong_ordering operator<=>(const JetSymbol& a, const JetSymbol& b) {
    if (auto c = a.func <=> b.func; c != 0)
        return c;
    if (auto c = a.order() <=> b.order(); c != 0)
        return c;
    return a.dx <=> b.dx;
}

std::string to_string(const JetSymbol& j) {
    std::string s = j.func;
    if (j.order() > 0) {
        s += '_';
        s.append(j.dx, 'x');
        s.append(j.dy, 'y');
    }
    return s;
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    if (auto c = a.kind <=> b.kind; c != 0)
        return c;
    if (a.kind != Symbol::Kind::Jet)
        return std::strong_ordering::equal;
    return a.jet <=> b.jet;
}

std::string to_string(const Symbol& s) {
    switch (s.kind) {
    case Symbol::Kind::X: return "x";
    case Symbol::Kind::Y: return "y";
    case Symbol::Kind::Jet: return to_string(s.jet);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Monomials

Monomial::Monomial(Symbol s, unsigned e) {
    if (e > 0) {
        factors_.emplace_back(std::move(s), e);
        degree_ = e;
    }
}

unsigned Monomial::degree(const Symbol& s) const noexcept {
    for (const auto& [sym, e] : factors_)
        if (sym == s)
            return e;
    return 0;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
    Monomial out;
    auto it = factors_.begin();
    for (const auto& [sym, e] : other.factors_) {
        while (it != factors_.end() && it->first < sym)
            out.factors_.push_back(*it++);
        if (it == factors_.end() || it->first != sym || it->second < e)
            return std::nullopt;
        if (it->second > e)
            out.factors_.emplace_back(sym, it->second - e);
        ++it;
    }
    out.factors_.insert(out.factors_.end(), it, factors_.end());
    out.degree_ = degree_ - other.degree_;
    return out;
}

Monomial Monomial::without(const Symbol& s) const {
    Monomial out;
    for (const auto& f : factors_) {
        if (f.first == s)
            continue;
        out.factors_.push_back(f);
        out.degree_ += f.second;
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first)
            out.factors_.push_back(*i++);
        else if (j->first < i->first)
            out.factors_.push_back(*j++);
        else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else {
            unsigned e = std::min(i->second, j->second);
            out.factors_.emplace_back(i->first, e);
            out.degree_ += e;
            ++i;
            ++j;
        }
    }
    return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.total_degree() != b.total_degree())
        return a.total_degree() > b.total_degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto i = fa.begin(), j = fb.begin();
    while (i != fa.end() && j != fb.end()) {
        if (i->first == j->first) {
            if (i->second != j->second)
                return i->second > j->second;
            ++i;
            ++j;
        } else {
            // the monomial holding the smaller symbol has a positive exponent where the other has 0
            return i->first < j->first;
        }
    }
    return i != fa.end() && j == fb.end();
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

using Term = Polynomial::Term;

void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return TermOrder{}(a.first, b.first); });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    terms = std::move(out);
}

Rational rational_pow(const Rational& base, unsigned e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace

Polynomial::Polynomial(long c) {
    if (c != 0)
        terms_.emplace_back(Monomial{}, Rational(c));
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0)
        terms_.emplace_back(Monomial{}, c);
}

Polynomial::Polynomial(Monomial m, Rational c) {
    if (c != 0)
        terms_.emplace_back(std::move(m), std::move(c));
}

Polynomial Polynomial::symbol(const Symbol& s) { return Polynomial(Monomial(s)); }

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    Polynomial p;
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

bool Polynomial::is_one() const { return is_constant() && !terms_.empty() && terms_.front().second == 1; }

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one())
        return terms_.back().second;
    return 0;
}

const Rational& Polynomial::leading_coefficient() const {
    assert(!terms_.empty());
    return terms_.front().second;
}

const Monomial& Polynomial::leading_monomial() const {
    assert(!terms_.empty());
    return terms_.front().first;
}

unsigned Polynomial::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().first.total_degree();
}

unsigned Polynomial::degree(const Symbol& s) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.first.degree(s));
    return d;
}

bool Polynomial::contains(const Symbol& s) const noexcept {
    for (const auto& t : terms_)
        if (t.first.degree(s) > 0)
            return true;
    return false;
}

std::set<Symbol> Polynomial::symbols() const {
    std::set<Symbol> out;
    for (const auto& t : terms_)
        for (const auto& f : t.first.factors())
            out.insert(f.first);
    return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(const Symbol& s) const {
    std::vector<std::vector<Term>> buckets(degree(s) + 1);
    for (const auto& [m, c] : terms_)
        buckets[m.degree(s)].emplace_back(m.without(s), c);
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets)
        out.push_back(from_terms(std::move(b)));
    return out;
}

Polynomial Polynomial::from_coefficients(const Symbol& s, const std::vector<Polynomial>& coeffs) {
    std::vector<Term> terms;
    for (unsigned k = 0; k < coeffs.size(); ++k) {
        Monomial sk(s, k);
        for (const auto& [m, c] : coeffs[k].terms_)
            terms.emplace_back(m * sk, c);
    }
    return from_terms(std::move(terms));
}

Polynomial Polynomial::diff(Var v) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
        const auto& fs = m.factors();
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const auto& [sym, e] = fs[i];
            Monomial rest = m.without(sym) * Monomial(sym, e - 1);
            switch (sym.kind) {
            case Symbol::Kind::X:
                if (v == Var::X)
                    out.emplace_back(std::move(rest), c * e);
                break;
            case Symbol::Kind::Y:
                if (v == Var::Y)
                    out.emplace_back(std::move(rest), c * e);
                break;
            case Symbol::Kind::Jet:
                out.emplace_back(rest * Monomial(Symbol::of(sym.jet.derivative(v))), c * e);
                break;
            }
        }
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::partial(const Symbol& s) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
        unsigned e = m.degree(s);
        if (e == 0)
            continue;
        out.emplace_back(m.without(s) * Monomial(s, e - 1), c * e);
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1L), base = *this;
    while (e > 0) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return result;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty())
        return {};
    Monomial g = terms_.front().first;
    for (const auto& t : terms_) {
        if (g.is_one())
            break;
        g = gcd(g, t.first);
    }
    return g;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
    if (m.is_one())
        return *this;
    Polynomial out;
    out.terms_.reserve(terms_.size());
    for (const auto& [tm, c] : terms_) {
        auto q = tm.divide(m);
        assert(q);
        out.terms_.emplace_back(std::move(*q), c);
    }
    // Dividing all terms by a common monomial preserves TermOrder.
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0)
        return {};
    Polynomial out = *this;
    for (auto& t : out.terms_)
        t.second *= c;
    return out;
}

Rational Polynomial::rational_content() const {
    if (terms_.empty())
        return 1;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty())
        return {};
    Rational c = rational_content();
    if (leading_coefficient() < 0)
        c = -c;
    return scaled(1 / c);
}

Polynomial Polynomial::eval(const Symbol& s, const Rational& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        unsigned e = m.degree(s);
        if (e == 0)
            out.emplace_back(m, c);
        else
            out.emplace_back(m.without(s), c * rational_pow(value, e));
    }
    return from_terms(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    TermOrder before;
    while (i != a.terms_.end() && j != b.terms_.end()) {
        if (before(i->first, j->first))
            out.terms_.push_back(*i++);
        else if (before(j->first, i->first))
            out.terms_.push_back(*j++);
        else {
            Rational c = i->second + j->second;
            if (c != 0)
                out.terms_.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    out.terms_.insert(out.terms_.end(), i, a.terms_.end());
    out.terms_.insert(out.terms_.end(), j, b.terms_.end());
    return out;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial out = a;
    for (auto& t : out.terms_)
        t.second = -t.second;
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.is_constant())
        return b.scaled(a.leading_coefficient());
    if (b.is_constant())
        return a.scaled(b.leading_coefficient());
    std::map<Monomial, Rational, TermOrder> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    Polynomial out;
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            out.terms_.emplace_back(m, std::move(c));
    return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw Error(Errc::DivisionByZero, "polynomial division by zero");
    if (a.is_zero())
        return Polynomial{};
    if (b.is_constant())
        return a.scaled(1 / b.leading_coefficient());
    if (b.terms().size() == 1) {
        std::vector<Term> out;
        out.reserve(a.terms().size());
        for (const auto& [m, c] : a.terms()) {
            auto q = m.divide(b.leading_monomial());
            if (!q)
                return std::nullopt;
            out.emplace_back(std::move(*q), c / b.leading_coefficient());
        }
        return Polynomial::from_terms(std::move(out));
    }
    if (a.total_degree() < b.total_degree())
        return std::nullopt;
    // Quick degree screen per symbol.
    for (const auto& s : b.symbols())
        if (a.degree(s) < b.degree(s))
            return std::nullopt;

    std::vector<Term> quotient;
    Polynomial rem = a;
    const Monomial& lb = b.leading_monomial();
    const Rational& cb = b.leading_coefficient();
    while (!rem.is_zero()) {
        auto q = rem.leading_monomial().divide(lb);
        if (!q)
            return std::nullopt;
        Rational c = rem.leading_coefficient() / cb;
        Polynomial t(*q, c);
        rem = rem - t * b;
        quotient.emplace_back(std::move(*q), std::move(c));
    }
    return Polynomial::from_terms(std::move(quotient));
}

namespace {

std::string coefficient_string(const Rational& c) {
    return c.get_str();
}

} // namespace

std::string to_string(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        bool wrote = false;
        if (m.is_one() || mag != 1) {
            os << coefficient_string(mag);
            wrote = true;
        }
        for (const auto& [sym, e] : m.factors()) {
            if (wrote)
                os << '*';
            os << to_string(sym);
            if (e > 1)
                os << '^' << e;
            wrote = true;
        }
    }
    return os.str();
}

} // namespace lapinv
