#pragma once

#include <cstdint>
#include <random>

#include "lapinv/lpdo.hpp"

namespace lapinv {

/// An operator built around a known kernel element: for polynomials z != 0, a, b
/// set c = -(z_xy + a z_x + b z_y) / z, so L = DxDy + a Dx + b Dy + c kills z.
struct OraclePair {
    LPDO op;
    RationalExpr z;
};

OraclePair make_oracle_pair(const RationalExpr& z, const RationalExpr& a, const RationalExpr& b);

/// Seeded source of random polynomials, rationals and oracle pairs in x, y.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    /// Dense-ish polynomial of total degree <= max_degree, integer coefficients in
    /// [-coeff_range, coeff_range], at most max_terms terms.
    Polynomial polynomial(unsigned max_degree = 3, unsigned max_terms = 4, long coeff_range = 3);
    Polynomial nonzero_polynomial(unsigned max_degree = 3, unsigned max_terms = 4, long coeff_range = 3);
    /// p / q with q nonzero.
    RationalExpr rational(unsigned max_degree = 2, unsigned max_terms = 3);
    RationalExpr nonzero_rational(unsigned max_degree = 2, unsigned max_terms = 3);
    /// Random z, a, b of total degree <= max_degree; z is non-constant.
    OraclePair oracle_pair(unsigned max_degree = 3);

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace lapinv
