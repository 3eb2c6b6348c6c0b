#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lapinv {

struct PropertyFailure {
    int instance;
    std::string property;
    std::string detail;
};

struct PropertyReport {
    int instances = 0;
    int checks = 0;
    std::vector<PropertyFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Random oracle pairs (L, z) with z, a, b of degree <= max_degree. Per pair:
/// X/Y residuals of (R, Q) vanish, R_y - Q_x = h - k, and both (h, k) and
/// (R, Q) are unchanged by a random rational gauge g with z -> z / g.
PropertyReport run_property_suite(std::uint64_t seed, int count = 200, unsigned max_degree = 3);

} // namespace lapinv
