#include "lapinv/invariants.hpp"

#include "lapinv/error.hpp"
#include "lapinv/oracle.hpp"
#include "support.hpp"

using namespace lapinv;
using lapinv::test::E;

namespace {

const char* const kExampleOp = "DxDy + (1 - x^2 - x*y)";

Errc error_code(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::VerificationFailed;
}

} // namespace

TEST_CASE("laplace invariants") {
    auto [h, k] = laplace_invariants(parse_operator(kExampleOp));
    CHECK(h == E("-1+x^2+y*x"));
    CHECK(k == h);

    auto inv1 = laplace_invariants(parse_operator("DxDy - 1/(x+y)*Dy - x^2 - x*y"));
    CHECK(inv1.h == E("x^2+x*y"));
    CHECK(inv1.k == E("(x^4+3*x^3*y+3*x^2*y^2+y^3*x+1)/(x+y)^2"));

    auto zero = laplace_invariants(LPDO::derivation(1, 1));
    CHECK(zero.h.is_zero());
    CHECK(zero.k.is_zero());

    CHECK(error_code([] { laplace_invariants(parse_operator("DxDx + x")); }) == Errc::NotNormalForm);
}

TEST_CASE("pair invariants") {
    auto p = pair_invariants(parse_operator(kExampleOp), parse_exp_rational("exp(-(x^2/2+x*y))"));
    CHECK(p.r == E("x+y"));
    CHECK(p.q == E("x"));

    // z = xy + 1, c = -z_xy/z
    auto p2 = pair_invariants(LPDO::hyperbolic(0, 0, E("-1/(x*y+1)")), ExpRational(E("x*y+1")));
    CHECK(p2.r == E("-y/(x*y+1)"));
    CHECK(p2.q == E("-x/(x*y+1)"));

    auto p3 = pair_invariants(LPDO::derivation(1, 1), ExpRational(E("x^2+y")));
    CHECK(p3.r == E("-2*x/(x^2+y)"));
    CHECK(p3.q == E("-1/(x^2+y)"));

    CHECK(error_code([] { pair_invariants(LPDO::derivation(1, 1), ExpRational(E("x*y"))); }) == Errc::NotInKernel);
    CHECK(error_code([] { pair_invariants(LPDO::derivation(1, 1), ExpRational{}); }) == Errc::ZeroFunction);
}

TEST_CASE("residual examples") {
    RationalExpr hk = E("-1+x^2+x*y");
    CHECK(x_residual(E("x+y"), hk, hk).is_zero());
    CHECK(x_residual(E("-2*x/(x^2+y)"), 0, 0).is_zero());
    // -r_y + (ln r)_xy = -1 - 1/(x+y)^2
    CHECK(x_residual(E("x+y"), 0, 0) == E("-1 - 1/(x+y)^2"));
    CHECK(error_code([] { x_residual(0, 0, 0); }) == Errc::ZeroFunction);

    CHECK(y_residual(E("x"), hk, hk).is_zero());
    CHECK(y_residual(E("-x/(x*y+1)"), E("1/(x*y+1)"), E("1/(x*y+1)")).is_zero());
    CHECK(y_residual(1, 0, 0).is_zero());

    CHECK(compatibility_residual(E("x+y"), E("x"), hk, hk).is_zero());
    CHECK(compatibility_residual(E("-y/(x*y+1)"), E("-x/(x*y+1)"), E("1/(x*y+1)"), E("1/(x*y+1)")).is_zero());
    CHECK(compatibility_residual(E("y"), 0, 0, 0) == RationalExpr(1L));
}

TEST_CASE("x residual on a jet is the defining equation") {
    RationalExpr r = RationalExpr::jet("r");
    RationalExpr h = E("x"), k = E("y");
    RationalExpr expected = h - k - E("r_y") + E("-y*r_x/r^2") + E("r_xy/r - r_x*r_y/r^2");
    CHECK(x_residual(r, h, k) == expected);
}

TEST_CASE("gauge invariance of h and k") {
    InstanceGenerator gen(test::seed() + 20);
    for (int n = 0; n < 60; ++n) {
        LPDO l = LPDO::hyperbolic(gen.polynomial(2, 3), gen.polynomial(2, 3), gen.polynomial(2, 3));
        RationalExpr g = gen.nonzero_rational(2, 2);
        CHECK(laplace_invariants(gauge(l, g)) == laplace_invariants(l));
    }
}

TEST_CASE("gauge invariance of pair invariants") {
    InstanceGenerator gen(test::seed() + 21);
    for (int n = 0; n < 60; ++n) {
        auto pair = gen.oracle_pair(2);
        RationalExpr g = gen.nonzero_rational(2, 2);
        CHECK(pair_invariants(gauge(pair.op, g), ExpRational(pair.z / g)) ==
              pair_invariants(pair.op, ExpRational(pair.z)));
    }
}

TEST_CASE("oracle pairs satisfy both residual equations and compatibility") {
    InstanceGenerator gen(test::seed() + 22);
    for (int n = 0; n < 100; ++n) {
        auto pair = gen.oracle_pair(3);
        auto [h, k] = laplace_invariants(pair.op);
        auto [r, q] = pair_invariants(pair.op, ExpRational(pair.z));
        INFO("L = ", to_string(pair.op), "  z = ", to_string(pair.z));
        if (!r.is_zero())
            CHECK(x_residual(r, h, k).is_zero());
        if (!q.is_zero())
            CHECK(y_residual(q, h, k).is_zero());
        CHECK(compatibility_residual(r, q, h, k).is_zero());
    }
}

TEST_CASE("kernel reconstruction from an X-invariant") {
    LPDO l = parse_operator(kExampleOp);
    ExpRational z = kernel_from_x_invariant(l, E("x+y"));
    CHECK(z == parse_exp_rational("exp(-(x^2/2+x*y))"));

    CHECK(error_code([] { kernel_from_x_invariant(LPDO::derivation(1, 1), E("-2*x/(x^2+y)")); }) ==
          Errc::NonElementaryIntegral);
    CHECK(error_code([] { kernel_from_x_invariant(parse_operator("DxDy + x*y*Dx"), 0); }) == Errc::ZeroFunction);
    CHECK(error_code([&] { kernel_from_x_invariant(l, E("x")); }) == Errc::NotAnXInvariant);

    // oracle recipe on DxDy + c with z = exp(x/(y+1) + y^2)
    ExpRational zz = ExpRational::exp(E("x/(y+1) + y^2"));
    RationalExpr c = -(zz.diff(Var::X).diff(Var::Y) / zz).prefactor();
    LPDO lc = LPDO::hyperbolic(0, 0, c);
    auto [r, q] = pair_invariants(lc, zz);
    ExpRational rebuilt = kernel_from_x_invariant(lc, r);
    CHECK(apply(lc, rebuilt).is_zero());
    CHECK(pair_invariants(lc, rebuilt) == PairInvariants{r, q});
}

TEST_CASE("kernel reconstruction from a Y-invariant") {
    LPDO l = parse_operator(kExampleOp);
    CHECK(kernel_from_y_invariant(l, E("x")) == parse_exp_rational("exp(-(x^2/2+x*y))"));
    CHECK(error_code([&] { kernel_from_y_invariant(l, E("y")); }) == Errc::NotAYInvariant);
}

TEST_CASE("base point independence") {
    ExpRational z0 = ExpRational::exp(E("x*y+y^2"));
    RationalExpr a = E("1/x");
    RationalExpr c = -((z0.diff(Var::X).diff(Var::Y) + ExpRational(a) * z0.diff(Var::X)) / z0).prefactor();
    LPDO l = LPDO::hyperbolic(a, 0, c);
    auto [r, q] = pair_invariants(l, z0);
    CHECK(kernel_from_x_invariant(l, r) == z0);

    for (auto [x0, y0] : {std::pair{2, 0}, std::pair{1, 3}, std::pair{-3, 5}}) {
        BasePoint base{x0, y0};
        ExpRational z = kernel_from_x_invariant(l, r, base);
        CHECK(apply(l, z).is_zero());
        CHECK(corresponding_y_invariant(l, r, base) == q);
        CHECK(corresponding_x_invariant(l, q, base) == r);
    }
}

TEST_CASE("corresponding invariants") {
    LPDO l = parse_operator(kExampleOp);
    CHECK(corresponding_y_invariant(l, E("x+y")) == E("x"));
    CHECK(corresponding_x_invariant(l, E("x")) == E("x+y"));
    CHECK(corresponding_x_invariant(l, corresponding_y_invariant(l, E("x+y"))) == E("x+y"));
    CHECK(error_code([&] { corresponding_y_invariant(l, E("y")); }) == Errc::NotAnXInvariant);

    auto [h, k] = laplace_invariants(l);
    CHECK(compatibility_residual(E("x+y"), corresponding_y_invariant(l, E("x+y")), h, k).is_zero());
}

TEST_CASE("random round trips through the corresponding map") {
    InstanceGenerator gen(test::seed() + 23);
    int checked = 0;
    for (int n = 0; n < 80; ++n) {
        // polynomial exponent keeps b + r polynomial in x
        ExpRational z(1, gen.polynomial(3, 3));
        LPDO l = LPDO::hyperbolic(gen.polynomial(1, 2), gen.polynomial(1, 2), 0);
        RationalExpr a = l.coeff(1, 0), b = l.coeff(0, 1);
        RationalExpr c = -((z.diff(Var::X).diff(Var::Y) + ExpRational(a) * z.diff(Var::X) +
                            ExpRational(b) * z.diff(Var::Y)) /
                           z)
                              .prefactor();
        l = LPDO::hyperbolic(a, b, c);
        auto [r, q] = pair_invariants(l, z);
        if (r.is_zero() || q.is_zero())
            continue;
        INFO("L = ", to_string(l), "  z = ", to_string(z));
        CHECK(corresponding_y_invariant(l, r) == q);
        CHECK(corresponding_x_invariant(l, q) == r);
        RationalExpr at_origin = z.exponent().substitute(Symbol::x(), 0).substitute(Symbol::y(), 0);
        CHECK(kernel_from_x_invariant(l, r) == ExpRational::exp(z.exponent() - at_origin));
        ++checked;
    }
    CHECK(checked > 40);
}

TEST_CASE("swap_xy mirrors operators and invariants") {
    LPDO l = parse_operator("DxDy + x*Dx + y^2*Dy + x*y + r_x");
    LPDO s = swap_xy(l);
    CHECK(s == parse_operator("DxDy + y*Dy + x^2*Dx + x*y + r_y"));
    CHECK(swap_xy(s) == l);
    auto inv = laplace_invariants(l), sinv = laplace_invariants(s);
    CHECK(sinv.h == swap_xy(inv.k));
    CHECK(sinv.k == swap_xy(inv.h));
    CHECK(swap_xy(parse_operator("DxDx + Dy")) == parse_operator("DyDy + Dx"));
}
