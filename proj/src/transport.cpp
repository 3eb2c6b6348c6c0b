#include "lapinv/transport.hpp"

#include "lapinv/error.hpp"

namespace lapinv {

namespace {

void check_generator(const RationalExpr& v, const RationalExpr& v0, const char* name, const char* gen) {
    if (v0.is_zero())
        throw Error(Errc::ZeroInvariant, std::string(gen) + " must be nonzero");
    if (v == v0)
        throw Error(Errc::GeneratorExcluded,
                    std::string(name) + " = " + gen + " is the excluded generator of the transformation");
}

RationalExpr same_direction(const RationalExpr& v, const RationalExpr& v0, Var var) {
    return v + (v / v0).diff(var) * v0 / (v0 - v);
}

} // namespace

RationalExpr transport_x_under_x(const RationalExpr& r, const RationalExpr& r0) {
    check_generator(r, r0, "r", "r0");
    return same_direction(r, r0, Var::X);
}

RationalExpr transport_y_under_y(const RationalExpr& q, const RationalExpr& q0) {
    check_generator(q, q0, "q", "q0");
    return same_direction(q, q0, Var::Y);
}

RationalExpr transport_x_under_y(const RationalExpr& r, const RationalExpr& q, const RationalExpr& q0,
                                 const RationalExpr& h) {
    check_generator(q, q0, "q", "q0");
    return -(q0.diff(Var::X) + h - q0 * r) / (q0 - q);
}

RationalExpr transport_y_under_x(const RationalExpr& q, const RationalExpr& r, const RationalExpr& r0,
                                 const RationalExpr& k, bool strict) {
    if (strict)
        throw Error(Errc::StrictMode, "Y-invariant transport under an X-transformation is an extension by symmetry; "
                                      "disabled in strict mode");
    check_generator(r, r0, "r", "r0");
    return -(r0.diff(Var::Y) + k - r0 * q) / (r0 - r);
}

} // namespace lapinv
