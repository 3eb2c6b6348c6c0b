#include "lapinv/oracle.hpp"

namespace lapinv {

OraclePair make_oracle_pair(const RationalExpr& z, const RationalExpr& a, const RationalExpr& b) {
    RationalExpr zx = z.diff(Var::X), zy = z.diff(Var::Y);
    RationalExpr c = -(zx.diff(Var::Y) + a * zx + b * zy) / z;
    return {LPDO::hyperbolic(a, b, c), z};
}

Polynomial InstanceGenerator::polynomial(unsigned max_degree, unsigned max_terms, long coeff_range) {
    std::uniform_int_distribution<unsigned> terms_dist(1, max_terms);
    std::uniform_int_distribution<unsigned> deg_dist(0, max_degree);
    std::uniform_int_distribution<long> coeff_dist(-coeff_range, coeff_range);
    std::vector<Polynomial::Term> terms;
    unsigned n = terms_dist(rng_);
    for (unsigned k = 0; k < n; ++k) {
        unsigned total = deg_dist(rng_);
        unsigned ex = std::uniform_int_distribution<unsigned>(0, total)(rng_);
        Monomial m = Monomial(Symbol::x(), ex) * Monomial(Symbol::y(), total - ex);
        terms.emplace_back(std::move(m), Rational(coeff_dist(rng_)));
    }
    return Polynomial::from_terms(std::move(terms));
}

Polynomial InstanceGenerator::nonzero_polynomial(unsigned max_degree, unsigned max_terms, long coeff_range) {
    while (true) {
        Polynomial p = polynomial(max_degree, max_terms, coeff_range);
        if (!p.is_zero())
            return p;
    }
}

RationalExpr InstanceGenerator::rational(unsigned max_degree, unsigned max_terms) {
    return RationalExpr::fraction(polynomial(max_degree, max_terms), nonzero_polynomial(max_degree, max_terms));
}

RationalExpr InstanceGenerator::nonzero_rational(unsigned max_degree, unsigned max_terms) {
    return RationalExpr::fraction(nonzero_polynomial(max_degree, max_terms),
                                  nonzero_polynomial(max_degree, max_terms));
}

OraclePair InstanceGenerator::oracle_pair(unsigned max_degree) {
    Polynomial z;
    do {
        z = nonzero_polynomial(max_degree);
    } while (z.is_constant());
    return make_oracle_pair(z, polynomial(max_degree), polynomial(max_degree));
}

} // namespace lapinv
