#include "lapinv/lpdo.hpp"

#include <vector>

#include "json.hpp"

#include "lapinv/error.hpp"

namespace lapinv {

namespace {

void check_order(const LPDO::Coeffs& coeffs) {
    for (const auto& [idx, c] : coeffs)
        if (idx.first + idx.second > LPDO::kMaxOrder)
            throw Error(Errc::UnsupportedOrder,
                        "operator order " + std::to_string(idx.first + idx.second) + " exceeds " +
                            std::to_string(LPDO::kMaxOrder));
}

void accumulate(LPDO::Coeffs& coeffs, const DIndex& idx, const RationalExpr& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = coeffs.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coeffs.erase(it);
    }
}

long binomial(unsigned n, unsigned k) {
    long r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

LPDO::LPDO(const RationalExpr& scalar) {
    if (!scalar.is_zero())
        coeffs_.emplace(DIndex{0, 0}, scalar);
}

LPDO LPDO::from_coeffs(Coeffs coeffs) {
    std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    check_order(coeffs);
    LPDO l;
    l.coeffs_ = std::move(coeffs);
    return l;
}

LPDO LPDO::derivation(unsigned i, unsigned j) {
    Coeffs c;
    c.emplace(DIndex{i, j}, RationalExpr(1L));
    return from_coeffs(std::move(c));
}

LPDO LPDO::hyperbolic(const RationalExpr& a, const RationalExpr& b, const RationalExpr& c) {
    Coeffs k;
    k.emplace(DIndex{1, 1}, RationalExpr(1L));
    k.emplace(DIndex{1, 0}, a);
    k.emplace(DIndex{0, 1}, b);
    k.emplace(DIndex{0, 0}, c);
    return from_coeffs(std::move(k));
}

RationalExpr LPDO::coeff(unsigned i, unsigned j) const {
    auto it = coeffs_.find(DIndex{i, j});
    return it == coeffs_.end() ? RationalExpr{} : it->second;
}

unsigned LPDO::order() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.begin()->first.first + coeffs_.begin()->first.second;
}

bool LPDO::is_hyperbolic_normal() const {
    return order() == 2 && coeff(1, 1) == RationalExpr(1L) && coeff(2, 0).is_zero() && coeff(0, 2).is_zero();
}

LPDO operator+(const LPDO& a, const LPDO& b) {
    LPDO out = a;
    for (const auto& [idx, c] : b.coeffs_)
        accumulate(out.coeffs_, idx, c);
    return out;
}

LPDO operator-(const LPDO& a) {
    LPDO out = a;
    for (auto& [idx, c] : out.coeffs_)
        c = -c;
    return out;
}

LPDO operator-(const LPDO& a, const LPDO& b) { return a + (-b); }

LPDO compose(const LPDO& p, const LPDO& q) {
    if (p.order() + q.order() > LPDO::kMaxOrder && !p.is_zero() && !q.is_zero())
        throw Error(Errc::UnsupportedOrder, "composition would exceed order " + std::to_string(LPDO::kMaxOrder));
    LPDO::Coeffs out;
    for (const auto& [qi, qc] : q.coeffs()) {
        // derivatives of the coefficient that the Leibniz rule can request
        unsigned max_i = 0, max_j = 0;
        for (const auto& [pi, pc] : p.coeffs()) {
            max_i = std::max(max_i, pi.first);
            max_j = std::max(max_j, pi.second);
        }
        std::vector<std::vector<RationalExpr>> dq(max_i + 1, std::vector<RationalExpr>(max_j + 1));
        for (unsigned s = 0; s <= max_i; ++s)
            for (unsigned t = 0; t <= max_j; ++t)
                dq[s][t] = t > 0 ? dq[s][t - 1].diff(Var::Y) : (s > 0 ? dq[s - 1][0].diff(Var::X) : qc);

        for (const auto& [pi, pc] : p.coeffs()) {
            for (unsigned s = 0; s <= pi.first; ++s)
                for (unsigned t = 0; t <= pi.second; ++t) {
                    if (dq[s][t].is_zero())
                        continue;
                    RationalExpr c = pc * dq[s][t] * RationalExpr(binomial(pi.first, s) * binomial(pi.second, t));
                    accumulate(out, DIndex{pi.first - s + qi.first, pi.second - t + qi.second}, c);
                }
        }
    }
    return LPDO::from_coeffs(std::move(out));
}

ExpRational apply(const LPDO& p, const ExpRational& f) {
    ExpRational acc;
    for (const auto& [idx, c] : p.coeffs()) {
        ExpRational d = f;
        for (unsigned s = 0; s < idx.first; ++s)
            d = d.diff(Var::X);
        for (unsigned t = 0; t < idx.second; ++t)
            d = d.diff(Var::Y);
        acc = acc + ExpRational(c) * d;
    }
    return acc;
}

LPDO gauge(const LPDO& l, const RationalExpr& g) {
    if (g.is_zero())
        throw Error(Errc::DivisionByZero, "gauge by the zero function");
    return compose(compose(LPDO(g.inverse()), l), LPDO(g));
}

LPDO residual(const LPDO& m1, const LPDO& l, const LPDO& l1, const LPDO& m) {
    return compose(m1, l) - compose(l1, m);
}

PrincipalSymbol symbol(const LPDO& l) {
    PrincipalSymbol s;
    s.degree = l.order();
    for (const auto& [idx, c] : l.coeffs())
        if (idx.first + idx.second == s.degree)
            s.coeffs.emplace(idx, c);
    return s;
}

namespace {

std::string power_product(const char* letter, unsigned i, const char* other, unsigned j) {
    std::string out;
    auto put = [&out](const char* v, unsigned e) {
        if (e == 0)
            return;
        if (!out.empty())
            out += '*';
        out += v;
        if (e > 1)
            out += "^" + std::to_string(e);
    };
    put(letter, i);
    put(other, j);
    return out;
}

std::string d_monomial(const DIndex& idx) {
    std::string out;
    for (unsigned k = 0; k < idx.first; ++k)
        out += "Dx";
    for (unsigned k = 0; k < idx.second; ++k)
        out += "Dy";
    return out;
}

} // namespace

std::string to_string(const PrincipalSymbol& s) {
    if (s.coeffs.empty())
        return "0";
    std::string out;
    for (const auto& [idx, c] : s.coeffs) {
        if (!out.empty())
            out += " + ";
        std::string mono = power_product("X", idx.first, "Y", idx.second);
        if (c == RationalExpr(1L))
            out += mono.empty() ? "1" : mono;
        else
            out += "(" + to_string(c) + ")" + (mono.empty() ? "" : "*" + mono);
    }
    return out;
}

std::string to_string(const LPDO& l) {
    if (l.is_zero())
        return "0";
    std::string out;
    for (const auto& [idx, c] : l.coeffs()) {
        if (!out.empty())
            out += " + ";
        std::string d = d_monomial(idx);
        if (d.empty())
            out += "(" + to_string(c) + ")";
        else if (c == RationalExpr(1L))
            out += d;
        else
            out += "(" + to_string(c) + ")*" + d;
    }
    return out;
}

namespace {

LPDO evaluate_operator(const AstNode& node) {
    using K = AstNode::Kind;
    auto scalar_of = [](const LPDO& op, std::size_t pos) {
        if (op.order() > 0)
            throw Error(Errc::SyntaxError, "only functions may appear here", pos);
        return op.coeff(0, 0);
    };
    switch (node.kind) {
    case K::Number:
    case K::Variable:
    case K::Jet: return LPDO(evaluate(node).prefactor());
    case K::Exp: throw Error(Errc::SyntaxError, "operator coefficients must be rational", node.pos);
    case K::DiffOp: return LPDO::derivation(node.jet.dx, node.jet.dy);
    case K::Neg: return -evaluate_operator(*node.args[0]);
    case K::Add: return evaluate_operator(*node.args[0]) + evaluate_operator(*node.args[1]);
    case K::Sub: return evaluate_operator(*node.args[0]) - evaluate_operator(*node.args[1]);
    case K::Mul: return compose(evaluate_operator(*node.args[0]), evaluate_operator(*node.args[1]));
    case K::Div: {
        RationalExpr n = scalar_of(evaluate_operator(*node.args[0]), node.pos);
        RationalExpr d = scalar_of(evaluate_operator(*node.args[1]), node.pos);
        return LPDO(n / d);
    }
    case K::Pow: {
        LPDO base = evaluate_operator(*node.args[0]);
        if (node.exponent < 0)
            return LPDO(scalar_of(base, node.pos).pow(node.exponent));
        LPDO acc(1L);
        for (int k = 0; k < node.exponent; ++k)
            acc = compose(acc, base);
        return acc;
    }
    }
    throw Error(Errc::SyntaxError, "malformed syntax tree", node.pos);
}

} // namespace

LPDO parse_operator(std::string_view text, const ParseOptions& opts) {
    return evaluate_operator(*parse_ast(text, opts));
}

nlohmann::json to_json(const LPDO& l) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [idx, c] : l.coeffs())
        coeffs[std::to_string(idx.first) + "," + std::to_string(idx.second)] = to_string(c);
    return nlohmann::json{{"coeffs", coeffs}};
}

LPDO lpdo_from_json(const nlohmann::json& j, const ParseOptions& opts) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
        throw Error(Errc::SyntaxError, "operator JSON must be {\"coeffs\": {...}}", 0);
    LPDO::Coeffs coeffs;
    for (const auto& [key, value] : j["coeffs"].items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos || !value.is_string())
            throw Error(Errc::SyntaxError, "bad coefficient entry '" + key + "'", 0);
        unsigned i = 0, k = 0;
        try {
            std::size_t used_i = 0, used_k = 0;
            i = static_cast<unsigned>(std::stoul(key.substr(0, comma), &used_i));
            k = static_cast<unsigned>(std::stoul(key.substr(comma + 1), &used_k));
            if (used_i != comma || used_k != key.size() - comma - 1)
                throw std::invalid_argument(key);
        } catch (const std::logic_error&) {
            throw Error(Errc::SyntaxError, "bad coefficient key '" + key + "'", 0);
        }
        coeffs[DIndex{i, k}] = parse_expr(value.get<std::string>(), opts);
    }
    return LPDO::from_coeffs(std::move(coeffs));
}

} // namespace lapinv
