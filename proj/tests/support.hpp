#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "lapinv/expr.hpp"
#include "lapinv/parse.hpp"

namespace lapinv::test {

/// Property suites read LAPINV_SEED so failures can be replayed.
inline std::uint64_t seed(std::uint64_t fallback = 20240601) {
    if (const char* s = std::getenv("LAPINV_SEED"))
        return std::strtoull(s, nullptr, 10);
    return fallback;
}

inline RationalExpr E(const std::string& text) { return parse_expr(text); }

} // namespace lapinv::test

namespace doctest {
template <>
struct StringMaker<lapinv::RationalExpr> {
    static String convert(const lapinv::RationalExpr& e) { return lapinv::to_string(e).c_str(); }
};
template <>
struct StringMaker<lapinv::ExpRational> {
    static String convert(const lapinv::ExpRational& e) { return lapinv::to_string(e).c_str(); }
};
} // namespace doctest
