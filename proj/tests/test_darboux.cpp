#include "lapinv/darboux.hpp"

#include <set>

#include "lapinv/error.hpp"
#include "lapinv/invariants.hpp"
#include "lapinv/oracle.hpp"
#include "support.hpp"

using namespace lapinv;
using lapinv::test::E;

namespace {

const char* const kExampleOp = "DxDy + (1 - x^2 - x*y)";

void check_triple(const DarbouxTriple& t) {
    CHECK(residual(t.M1, t.L, t.L1, t.M).is_zero());
    CHECK(t.L1.is_hyperbolic_normal());
    std::set<std::string> names;
    std::set<DIndex> eqs;
    for (const auto& s : t.steps) {
        names.insert(s.unknown);
        eqs.insert(s.equation);
    }
    CHECK(t.steps.size() == 4);
    CHECK(names == std::set<std::string>{"a1", "b1", "c1", "m"});
    CHECK(eqs.size() == 4);
}

} // namespace

TEST_CASE("x_darboux on the worked example") {
    LPDO l = parse_operator(kExampleOp);
    DarbouxTriple t = x_darboux(l, E("x+y"));
    CHECK(t.kind == DarbouxKind::X);
    CHECK(t.L1 == parse_operator("DxDy - 1/(x+y)*Dy - x^2 - x*y"));
    CHECK(t.M == parse_operator("Dx + x + y"));
    CHECK(t.M1 == parse_operator("Dx + x + y - 1/(x+y)"));
    check_triple(t);

    auto [h1, k1] = laplace_invariants(t.L1);
    CHECK(h1 == E("x^2+x*y"));
    CHECK(k1 == E("(x^4+3*x^3*y+3*x^2*y^2+y^3*x+1)/(x+y)^2"));

    // triangular order: a1 from Dx^2, b1 from DxDy, c1 from Dx, m from Dy
    REQUIRE(t.steps.size() == 4);
    CHECK(t.steps[0].equation == DIndex{2, 0});
    CHECK(t.steps[1].equation == DIndex{1, 1});
    CHECK(t.steps[2].equation == DIndex{1, 0});
    CHECK(t.steps[3].equation == DIndex{0, 1});
}

TEST_CASE("x_darboux on DxDy with r0 from z0 = x^2 + y") {
    LPDO l = LPDO::derivation(1, 1);
    RationalExpr r0 = E("-2*x/(x^2+y)");
    DarbouxTriple t = x_darboux(l, r0);
    check_triple(t);
    CHECK(t.M1.coeff(0, 0) == r0 - r0.diff(Var::X) / r0);
    CHECK(t.L1.coeff(1, 0).is_zero());
}

TEST_CASE("closed forms of m on oracle pairs") {
    InstanceGenerator gen(test::seed() + 30);
    for (int n = 0; n < 40; ++n) {
        auto pair = gen.oracle_pair(2);
        auto [a, b, c] = hyperbolic_coeffs(pair.op);
        auto [r0, q0] = pair_invariants(pair.op, ExpRational(pair.z));
        INFO("L = ", to_string(pair.op), "  z = ", to_string(pair.z));
        if (!r0.is_zero()) {
            DarbouxTriple t = x_darboux(pair.op, r0);
            check_triple(t);
            CHECK(t.M1.coeff(0, 0) == r0 + b - r0.diff(Var::X) / r0);
            CHECK(t.L1.coeff(1, 0) == a);
            CHECK(kernel_map(t, ExpRational(pair.z)).is_zero());
        }
        if (!q0.is_zero()) {
            DarbouxTriple t = y_darboux(pair.op, q0);
            check_triple(t);
            CHECK(t.M1.coeff(0, 1) == RationalExpr(1L));
            CHECK(t.M1.coeff(0, 0) == q0 + a - q0.diff(Var::Y) / q0);
            CHECK(t.L1.coeff(0, 1) == b);
            CHECK(kernel_map(t, ExpRational(pair.z)).is_zero());
        }
    }
}

TEST_CASE("y_darboux examples") {
    LPDO l = parse_operator(kExampleOp);
    DarbouxTriple t = y_darboux(l, E("x"));
    check_triple(t);
    CHECK(t.M == parse_operator("Dy + x"));
    CHECK(t.L1.coeff(0, 1).is_zero());

    DarbouxTriple t2 = y_darboux(LPDO::derivation(1, 1), E("-1/(x^2+y)"));
    check_triple(t2);
}

TEST_CASE("y_darboux mirrors x_darboux") {
    LPDO l = parse_operator(kExampleOp);
    DarbouxTriple tx = x_darboux(l, E("x+y"));
    DarbouxTriple ty = y_darboux(swap_xy(l), swap_xy(E("x+y")));
    CHECK(ty.L1 == swap_xy(tx.L1));
    CHECK(ty.M == swap_xy(tx.M));
    CHECK(ty.M1 == swap_xy(tx.M1));

    InstanceGenerator gen(test::seed() + 31);
    for (int n = 0; n < 20; ++n) {
        auto pair = gen.oracle_pair(2);
        RationalExpr r0 = pair_invariants(pair.op, ExpRational(pair.z)).r;
        if (r0.is_zero())
            continue;
        CHECK(y_darboux(swap_xy(pair.op), swap_xy(r0)).L1 == swap_xy(x_darboux(pair.op, r0).L1));
    }
}

TEST_CASE("preconditions") {
    LPDO l = parse_operator(kExampleOp);
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::VerificationFailed;
    };
    CHECK(code([&] { x_darboux(l, E("x")); }) == Errc::NotAnXInvariant);
    CHECK(code([&] { x_darboux(l, 0); }) == Errc::ZeroInvariant);
    CHECK(code([&] { y_darboux(l, E("y")); }) == Errc::NotAYInvariant);
    CHECK(code([&] { y_darboux(l, 0); }) == Errc::ZeroInvariant);
    CHECK(code([&] { x_darboux(parse_operator("DxDx + Dy"), E("x")); }) == Errc::NotNormalForm);

    DarbouxTriple t = x_darboux(l, E("x"), {.unsafe = true});
    CHECK_FALSE(residual(t.M1, t.L, t.L1, t.M).is_zero());
}

TEST_CASE("kernel_map") {
    LPDO l = parse_operator(kExampleOp);
    DarbouxTriple t = x_darboux(l, E("x+y"));
    CHECK(kernel_map(t, parse_exp_rational("exp(-(x^2/2+x*y))")).is_zero());

    DarbouxTriple t0 = x_darboux(LPDO::derivation(1, 1), E("-2*x/(x^2+y)"));
    ExpRational w = kernel_map(t0, ExpRational(E("x+y^2")));
    CHECK(w == ExpRational(E("1 - 2*x*(x+y^2)/(x^2+y)")));
    CHECK(apply(t0.L1, w).is_zero());

    ExpRational z1(E("x+y^2")), z2(E("x^3+y"));
    CHECK(kernel_map(t0, z1 + z2) == kernel_map(t0, z1) + kernel_map(t0, z2));

    try {
        (void)kernel_map(t0, ExpRational(E("x*y")));
        FAIL("expected NotInKernel");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotInKernel);
    }
}
