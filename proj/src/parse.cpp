#include "lapinv/parse.hpp"

#include <cctype>
#include <climits>

#include "lapinv/error.hpp"

namespace lapinv {

namespace {

enum class Tok { End, Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen };

struct Token {
    Tok kind = Tok::End;
    std::size_t pos = 0;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
            ++i_;
        current_ = Token{Tok::End, i_, {}};
        if (i_ >= src_.size())
            return;
        char c = src_[i_];
        std::size_t start = i_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_])))
                ++i_;
            current_ = Token{Tok::Number, start, std::string(src_.substr(start, i_ - start))};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            current_ = Token{Tok::Ident, start, std::string(src_.substr(start, i_ - start))};
            return;
        }
        ++i_;
        switch (c) {
        case '+': current_.kind = Tok::Plus; break;
        case '-': current_.kind = Tok::Minus; break;
        case '*': current_.kind = Tok::Star; break;
        case '/': current_.kind = Tok::Slash; break;
        case '^': current_.kind = Tok::Caret; break;
        case '(': current_.kind = Tok::LParen; break;
        case ')': current_.kind = Tok::RParen; break;
        default: throw Error(Errc::SyntaxError, std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token current_;
};

using NodePtr = std::unique_ptr<AstNode>;

NodePtr make(AstNode::Kind kind, std::size_t pos) {
    auto n = std::make_unique<AstNode>();
    n->kind = kind;
    n->pos = pos;
    return n;
}

// Binding powers
constexpr int kAdditive = 10;
constexpr int kMultiplicative = 20;
constexpr int kUnary = 25;
constexpr int kPower = 30;

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& opts) : lex_(text), opts_(opts) {}

    NodePtr parse() {
        NodePtr e = expression(0);
        if (lex_.peek().kind != Tok::End)
            throw Error(Errc::SyntaxError, "unexpected trailing input", lex_.peek().pos);
        return e;
    }

private:
    NodePtr expression(int min_bp) {
        NodePtr lhs = prefix();
        while (true) {
            const Token& op = lex_.peek();
            int bp = infix_power(op.kind);
            if (bp <= min_bp)
                break;
            Token t = lex_.take();
            if (t.kind == Tok::Caret) {
                auto n = make(AstNode::Kind::Pow, t.pos);
                n->exponent = integer_exponent();
                n->args.push_back(std::move(lhs));
                lhs = std::move(n);
                continue;
            }
            AstNode::Kind kind = t.kind == Tok::Plus    ? AstNode::Kind::Add
                                 : t.kind == Tok::Minus ? AstNode::Kind::Sub
                                 : t.kind == Tok::Star  ? AstNode::Kind::Mul
                                                        : AstNode::Kind::Div;
            auto n = make(kind, t.pos);
            n->args.push_back(std::move(lhs));
            n->args.push_back(expression(bp));
            lhs = std::move(n);
        }
        return lhs;
    }

    static int infix_power(Tok t) {
        switch (t) {
        case Tok::Plus:
        case Tok::Minus: return kAdditive;
        case Tok::Star:
        case Tok::Slash: return kMultiplicative;
        case Tok::Caret: return kPower;
        default: return -1;
        }
    }

    int integer_exponent() {
        bool neg = false;
        bool paren = false;
        if (lex_.peek().kind == Tok::LParen) {
            lex_.take();
            paren = true;
        }
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.take();
        if (t.kind != Tok::Number)
            throw Error(Errc::SyntaxError, "exponent must be an integer literal", t.pos);
        Integer v(t.text);
        if (v > INT_MAX / 2)
            throw Error(Errc::SyntaxError, "exponent too large", t.pos);
        if (paren) {
            Token close = lex_.take();
            if (close.kind != Tok::RParen)
                throw Error(Errc::SyntaxError, "expected ')'", close.pos);
        }
        int e = static_cast<int>(v.get_si());
        return neg ? -e : e;
    }

    NodePtr prefix() {
        Token t = lex_.take();
        switch (t.kind) {
        case Tok::Number: {
            auto n = make(AstNode::Kind::Number, t.pos);
            n->number = Integer(t.text);
            return n;
        }
        case Tok::Minus: {
            auto n = make(AstNode::Kind::Neg, t.pos);
            n->args.push_back(expression(kUnary));
            return n;
        }
        case Tok::Plus: return expression(kUnary);
        case Tok::LParen: {
            NodePtr inner = expression(0);
            Token close = lex_.take();
            if (close.kind != Tok::RParen)
                throw Error(Errc::SyntaxError, "expected ')'", close.pos);
            return inner;
        }
        case Tok::Ident: return identifier(t);
        case Tok::End: throw Error(Errc::SyntaxError, "unexpected end of input", t.pos);
        default: throw Error(Errc::SyntaxError, "unexpected token", t.pos);
        }
    }

    NodePtr identifier(const Token& t) {
        const std::string& s = t.text;
        if (s == "x" || s == "y") {
            auto n = make(AstNode::Kind::Variable, t.pos);
            n->var = s == "x" ? Var::X : Var::Y;
            return n;
        }
        if (s == "exp") {
            Token open = lex_.take();
            if (open.kind != Tok::LParen)
                throw Error(Errc::SyntaxError, "expected '(' after exp", open.pos);
            auto n = make(AstNode::Kind::Exp, t.pos);
            n->args.push_back(expression(0));
            Token close = lex_.take();
            if (close.kind != Tok::RParen)
                throw Error(Errc::SyntaxError, "expected ')'", close.pos);
            return n;
        }
        // Dx, Dy, DxDy, DxDxDy, ...: every 'D' is followed by one axis letter
        if (is_d_product(s)) {
            auto n = make(AstNode::Kind::DiffOp, t.pos);
            for (std::size_t i = 1; i < s.size(); i += 2)
                (s[i] == 'x' ? n->jet.dx : n->jet.dy) += 1;
            return n;
        }
        std::string func = s;
        JetSymbol jet;
        if (auto us = s.find('_'); us != std::string::npos) {
            func = s.substr(0, us);
            std::string suffix = s.substr(us + 1);
            if (suffix.empty() || suffix.find_first_not_of("xy") != std::string::npos)
                throw Error(Errc::SyntaxError, "derivative suffix must use only x and y", t.pos + us);
            for (char c : suffix)
                (c == 'x' ? jet.dx : jet.dy) += 1;
        }
        if (!opts_.functions.contains(func))
            throw Error(Errc::UnknownSymbol, "undeclared function '" + func + "'", t.pos);
        jet.func = func;
        auto n = make(AstNode::Kind::Jet, t.pos);
        n->jet = jet;
        return n;
    }

    static bool is_d_product(const std::string& s) {
        if (s.empty() || s.size() % 2 != 0)
            return false;
        for (std::size_t i = 0; i < s.size(); i += 2)
            if (s[i] != 'D' || (s[i + 1] != 'x' && s[i + 1] != 'y'))
                return false;
        return true;
    }

    Lexer lex_;
    const ParseOptions& opts_;
};

ExpRational power(const ExpRational& base, int e, std::size_t pos) {
    if (base.is_zero() && e < 0)
        throw Error(Errc::DivisionByZero, "negative power of zero at " + std::to_string(pos));
    return {base.prefactor().pow(e), base.exponent() * RationalExpr(static_cast<long>(e))};
}

} // namespace

std::unique_ptr<AstNode> parse_ast(std::string_view text, const ParseOptions& opts) {
    return Parser(text, opts).parse();
}

ExpRational evaluate(const AstNode& node) {
    using K = AstNode::Kind;
    switch (node.kind) {
    case K::Number: return ExpRational(RationalExpr(Rational(node.number)));
    case K::Variable: return ExpRational(RationalExpr::of(node.var));
    case K::Jet: return ExpRational(RationalExpr::jet(node.jet));
    case K::DiffOp: throw Error(Errc::SyntaxError, "operator symbol inside an expression", node.pos);
    case K::Exp: {
        ExpRational arg = evaluate(*node.args[0]);
        if (!arg.is_rational())
            throw Error(Errc::SyntaxError, "nested exp is not supported", node.pos);
        return ExpRational::exp(arg.prefactor());
    }
    case K::Neg: return -evaluate(*node.args[0]);
    case K::Add: return evaluate(*node.args[0]) + evaluate(*node.args[1]);
    case K::Sub: return evaluate(*node.args[0]) - evaluate(*node.args[1]);
    case K::Mul: return evaluate(*node.args[0]) * evaluate(*node.args[1]);
    case K::Div: return evaluate(*node.args[0]) / evaluate(*node.args[1]);
    case K::Pow: return power(evaluate(*node.args[0]), node.exponent, node.pos);
    }
    throw Error(Errc::SyntaxError, "malformed syntax tree", node.pos);
}

ExpRational parse_exp_rational(std::string_view text, const ParseOptions& opts) {
    return evaluate(*parse_ast(text, opts));
}

RationalExpr parse_expr(std::string_view text, const ParseOptions& opts) {
    ExpRational v = parse_exp_rational(text, opts);
    if (!v.is_rational())
        throw Error(Errc::SyntaxError, "exp(...) is not allowed in a rational expression", 0);
    return v.prefactor();
}

} // namespace lapinv
