#include "lapinv/properties.hpp"

#include "lapinv/error.hpp"
#include "lapinv/invariants.hpp"
#include "lapinv/oracle.hpp"

namespace lapinv {

PropertyReport run_property_suite(std::uint64_t seed, int count, unsigned max_degree) {
    InstanceGenerator gen(seed);
    PropertyReport report;
    for (int n = 0; n < count; ++n) {
        OraclePair pair = gen.oracle_pair(max_degree);
        RationalExpr g = gen.nonzero_rational(2, 2);
        auto fail = [&](const std::string& property, const std::string& detail) {
            report.failures.push_back({n, property, "L = " + to_string(pair.op) + ", z = " + to_string(pair.z) +
                                                        (detail.empty() ? "" : ": " + detail)});
        };
        auto check = [&](bool holds, const std::string& property, const std::string& detail = {}) {
            ++report.checks;
            if (!holds)
                fail(property, detail);
        };
        try {
            ExpRational z(pair.z);
            auto [h, k] = laplace_invariants(pair.op);
            auto [r, q] = pair_invariants(pair.op, z);
            if (!r.is_zero())
                check(x_residual(r, h, k).is_zero(), "x_residual", to_string(r));
            if (!q.is_zero())
                check(y_residual(q, h, k).is_zero(), "y_residual", to_string(q));
            check(compatibility_residual(r, q, h, k).is_zero(), "compatibility");

            LPDO lg = gauge(pair.op, g);
            check(laplace_invariants(lg) == LaplaceInvariants{h, k}, "gauge h,k", "g = " + to_string(g));
            check(pair_invariants(lg, ExpRational(pair.z / g)) == PairInvariants{r, q}, "gauge R,Q",
                  "g = " + to_string(g));
        } catch (const Error& e) {
            ++report.checks;
            fail("exception", e.what());
        }
        ++report.instances;
    }
    return report;
}

} // namespace lapinv
