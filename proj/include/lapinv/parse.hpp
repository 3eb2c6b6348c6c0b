#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lapinv/expr.hpp"

namespace lapinv {

struct ParseOptions {
    /// Function names accepted as jet symbols (with optional `_xxy` suffix).
    std::set<std::string> functions{"r", "q"};
};

/// Syntax tree shared by the expression and operator readers.
struct AstNode {
    enum class Kind { Number, Variable, Jet, DiffOp, Exp, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind;
    std::size_t pos = 0;
    Integer number;                  // Number
    Var var = Var::X;                // Variable
    JetSymbol jet;                   // Jet; DiffOp uses jet.dx / jet.dy as the D-exponents
    int exponent = 0;                // Pow
    std::vector<std::unique_ptr<AstNode>> args;
};

/// Parses the ASCII grammar: integers, x, y, declared jets `r_xxy`, `exp(...)`,
/// `Dx`/`Dy` products (operators only), `+ - * / ^` with integer exponents and
/// parentheses. Throws SyntaxError / UnknownSymbol with a byte position.
std::unique_ptr<AstNode> parse_ast(std::string_view text, const ParseOptions& opts = {});

RationalExpr parse_expr(std::string_view text, const ParseOptions& opts = {});
ExpRational parse_exp_rational(std::string_view text, const ParseOptions& opts = {});

/// Evaluates a tree without operator symbols.
ExpRational evaluate(const AstNode& node);

} // namespace lapinv
