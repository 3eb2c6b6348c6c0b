#include "lapinv/cli.hpp"

#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "lapinv/darboux.hpp"
#include "lapinv/error.hpp"
#include "lapinv/invariants.hpp"
#include "lapinv/jet_reduction.hpp"
#include "lapinv/properties.hpp"
#include "lapinv/transport.hpp"

namespace lapinv::cli {

namespace {

const std::pair<Command, const char*> kCommandNames[] = {
    {Command::Invariants, "invariants"},
    {Command::PairInvariants, "pair-invariants"},
    {Command::Gauge, "gauge"},
    {Command::CheckXInv, "check-xinv"},
    {Command::CheckYInv, "check-yinv"},
    {Command::KernelFromR, "kernel-from-r"},
    {Command::KernelFromQ, "kernel-from-q"},
    {Command::Corresponding, "corresponding"},
    {Command::DarbouxX, "darboux-x"},
    {Command::DarbouxY, "darboux-y"},
    {Command::Transport, "transport"},
    {Command::VerifyTransport, "verify-transport"},
    {Command::VerifyIntertwine, "verify-intertwine"},
    {Command::PropertyCheck, "property-check"},
};

const char* command_name(Command c) {
    for (const auto& [cmd, name] : kCommandNames)
        if (cmd == c)
            return name;
    return "?";
}

// Ordered key/value output: "key = value" lines or one JSON object.
class Report {
public:
    Report(Format format, Command command) : format_(format) { json_["command"] = command_name(command); }

    void add(const std::string& key, const std::string& text) { put(key, text, text); }
    void add(const std::string& key, const RationalExpr& e) { add(key, to_string(e)); }
    void add(const std::string& key, const ExpRational& e) { add(key, to_string(e)); }
    void add(const std::string& key, const LPDO& l) { put(key, to_string(l), to_json(l)); }
    void add(const std::string& key, bool b) { put(key, b ? "true" : "false", b); }
    void add(const std::string& key, long n) { put(key, std::to_string(n), n); }
    void add_json(const std::string& key, const std::string& text, nlohmann::json j) { put(key, text, std::move(j)); }

    void print(std::ostream& out) const {
        if (format_ == Format::Json) {
            out << json_.dump() << '\n';
            return;
        }
        for (const auto& [key, text] : lines_)
            out << key << " = " << text << '\n';
    }

private:
    void put(const std::string& key, std::string text, nlohmann::json j) {
        lines_.emplace_back(key, std::move(text));
        json_[key] = std::move(j);
    }

    Format format_;
    std::vector<std::pair<std::string, std::string>> lines_;
    nlohmann::json json_;
};

struct Inputs {
    const JobSpec& spec;
    ParseOptions opts;

    explicit Inputs(const JobSpec& s) : spec(s) {
        for (const auto& f : s.functions)
            opts.functions.insert(f);
    }

    const std::string& need(const std::optional<std::string>& v, const char* flag) const {
        if (!v)
            throw Error(Errc::SyntaxError, std::string(command_name(spec.command)) + " needs " + flag);
        return *v;
    }
    RationalExpr expr(const std::optional<std::string>& v, const char* flag) const {
        return parse_expr(need(v, flag), opts);
    }
    LPDO op(const std::string& text, const char* flag) const {
        if (text.empty())
            throw Error(Errc::SyntaxError, std::string(command_name(spec.command)) + " needs " + flag);
        if (text.front() == '{') {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                throw Error(Errc::SyntaxError, std::string(flag) + ": " + e.what());
            }
            return lpdo_from_json(j, opts);
        }
        return parse_operator(text, opts);
    }
    LPDO op() const { return op(spec.op, "--op"); }
    BasePoint base_point() const {
        auto comma = spec.base_point.find(',');
        if (comma == std::string::npos)
            throw Error(Errc::SyntaxError, "--base-point expects x0,y0");
        auto value = [&](std::string text) {
            try {
                Rational v(text);
                v.canonicalize();
                return v;
            } catch (const std::invalid_argument&) {
                throw Error(Errc::SyntaxError, "--base-point: '" + text + "' is not a rational number");
            }
        };
        return {value(spec.base_point.substr(0, comma)), value(spec.base_point.substr(comma + 1))};
    }
};

std::string infer_direction(const JobSpec& s) {
    if (!s.direction.empty())
        return s.direction;
    if (s.r0 && s.r && s.q)
        return "y-under-x";
    if (s.r0 && s.r)
        return "x-under-x";
    if (s.q0 && s.r && s.q)
        return "x-under-y";
    if (s.q0 && s.q)
        return "y-under-y";
    throw Error(Errc::SyntaxError, "transport needs --r0 with --r, or --q0 with --q (add --q/--r for cross transport)");
}

int holds(Report& report, bool ok) {
    report.add("holds", ok);
    return ok ? kOk : kIdentityFails;
}

int execute(const JobSpec& spec, Report& report) {
    Inputs in(spec);
    switch (spec.command) {
    case Command::Invariants: {
        auto [h, k] = laplace_invariants(in.op());
        report.add("h", h);
        report.add("k", k);
        return kOk;
    }
    case Command::PairInvariants: {
        auto [r, q] = pair_invariants(in.op(), parse_exp_rational(in.need(spec.z, "--z"), in.opts));
        report.add("r", r);
        report.add("q", q);
        return kOk;
    }
    case Command::Gauge: {
        LPDO l = in.op();
        LPDO lg = gauge(l, in.expr(spec.g, "--g"));
        report.add("Lg", lg);
        return holds(report, laplace_invariants(lg) == laplace_invariants(l));
    }
    case Command::CheckXInv: {
        auto [h, k] = laplace_invariants(in.op());
        RationalExpr res = x_residual(in.expr(spec.r, "--r"), h, k);
        report.add("residual", res);
        return holds(report, res.is_zero());
    }
    case Command::CheckYInv: {
        auto [h, k] = laplace_invariants(in.op());
        RationalExpr res = y_residual(in.expr(spec.q, "--q"), h, k);
        report.add("residual", res);
        return holds(report, res.is_zero());
    }
    case Command::KernelFromR:
        report.add("z", kernel_from_x_invariant(in.op(), in.expr(spec.r, "--r"), in.base_point()));
        return kOk;
    case Command::KernelFromQ:
        report.add("z", kernel_from_y_invariant(in.op(), in.expr(spec.q, "--q"), in.base_point()));
        return kOk;
    case Command::Corresponding: {
        if (spec.r.has_value() == spec.q.has_value())
            throw Error(Errc::SyntaxError, "corresponding needs exactly one of --r, --q");
        LPDO l = in.op();
        if (spec.r)
            report.add("q", corresponding_y_invariant(l, in.expr(spec.r, "--r"), in.base_point()));
        else
            report.add("r", corresponding_x_invariant(l, in.expr(spec.q, "--q"), in.base_point()));
        return kOk;
    }
    case Command::DarbouxX:
    case Command::DarbouxY: {
        LPDO l = in.op();
        DarbouxOptions opts{.unsafe = spec.unsafe};
        DarbouxTriple t = spec.command == Command::DarbouxX ? x_darboux(l, in.expr(spec.r0, "--r0"), opts)
                                                            : y_darboux(l, in.expr(spec.q0, "--q0"), opts);
        report.add("L1", t.L1);
        report.add("M", t.M);
        report.add("M1", t.M1);
        bool zero = residual(t.M1, t.L, t.L1, t.M).is_zero();
        if (zero) {
            auto [h1, k1] = laplace_invariants(t.L1);
            report.add("h1", h1);
            report.add("k1", k1);
        }
        report.add("residual_zero", zero);
        return zero ? kOk : kIdentityFails;
    }
    case Command::Transport: {
        std::string dir = infer_direction(spec);
        RationalExpr value;
        if (dir == "x-under-x") {
            value = transport_x_under_x(in.expr(spec.r, "--r"), in.expr(spec.r0, "--r0"));
        } else if (dir == "y-under-y") {
            value = transport_y_under_y(in.expr(spec.q, "--q"), in.expr(spec.q0, "--q0"));
        } else if (dir == "x-under-y") {
            RationalExpr h = laplace_invariants(in.op()).h;
            value = transport_x_under_y(in.expr(spec.r, "--r"), in.expr(spec.q, "--q"), in.expr(spec.q0, "--q0"), h);
        } else if (dir == "y-under-x") {
            if (spec.strict)
                throw Error(Errc::StrictMode, "y-under-x is an extension by symmetry; disabled by --strict");
            RationalExpr k = laplace_invariants(in.op()).k;
            value = transport_y_under_x(in.expr(spec.q, "--q"), in.expr(spec.r, "--r"), in.expr(spec.r0, "--r0"), k);
        } else {
            throw Error(Errc::SyntaxError, "unknown --direction " + dir);
        }
        report.add("direction", dir);
        report.add(dir.front() == 'x' ? "r1" : "q1", value);
        report.add("symbolic", !value.jets().empty());
        return kOk;
    }
    case Command::VerifyTransport: {
        LPDO l = in.op();
        RationalExpr res;
        if (spec.r0 && !spec.q0) {
            res = transport_closure_residual(l, in.expr(spec.r0, "--r0"), transport_x_under_x);
        } else if (spec.q0 && !spec.r0) {
            // y-under-y closure is x-under-x closure of the mirrored operator
            res = swap_xy(transport_closure_residual(swap_xy(l), swap_xy(in.expr(spec.q0, "--q0")),
                                                     transport_x_under_x));
        } else {
            throw Error(Errc::SyntaxError, "verify-transport needs exactly one of --r0, --q0");
        }
        report.add("residual", res);
        return holds(report, res.is_zero());
    }
    case Command::VerifyIntertwine: {
        LPDO res = residual(in.op(in.need(spec.m1, "--m1"), "--m1"), in.op(), in.op(in.need(spec.l1, "--l1"), "--l1"),
                            in.op(in.need(spec.m, "--m"), "--m"));
        report.add("residual", res);
        return holds(report, res.is_zero());
    }
    case Command::PropertyCheck: {
        if (spec.count <= 0)
            throw Error(Errc::SyntaxError, "--count must be positive");
        PropertyReport pr = run_property_suite(spec.seed, spec.count);
        report.add("seed", static_cast<long>(spec.seed));
        report.add("instances", static_cast<long>(pr.instances));
        report.add("checks", static_cast<long>(pr.checks));
        nlohmann::json failures = nlohmann::json::array();
        std::string text;
        for (const auto& f : pr.failures) {
            failures.push_back({{"instance", f.instance}, {"property", f.property}, {"detail", f.detail}});
            text += "\n  #" + std::to_string(f.instance) + " " + f.property + ": " + f.detail;
        }
        report.add_json("failures", std::to_string(pr.failures.size()) + text, failures);
        return pr.ok() ? kOk : kIdentityFails;
    }
    }
    return kBadInput;
}

} // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    Report report(spec.format, spec.command);
    try {
        int status = execute(spec, report);
        report.print(out);
        return status;
    } catch (const Error& e) {
        if (spec.format == Format::Json) {
            nlohmann::json j{{"command", command_name(spec.command)},
                             {"error", std::string(errc_name(e.code()))},
                             {"message", e.what()}};
            if (e.position())
                j["position"] = *e.position();
            out << j.dump() << '\n';
        }
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laplace invariants, X/Y-invariants and Darboux transformations of DxDy + a Dx + b Dy + c",
                 "lapinv"};
    app.require_subcommand(1);
    JobSpec spec;
    std::string format = "text";

    auto common = [&](CLI::App* sub, bool needs_op) {
        auto* o = sub->add_option("--op", spec.op, "Operator, as text (\"DxDy + x*Dx + 1\") or JSON");
        if (needs_op)
            o->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--functions", spec.functions, "Extra function names usable as jets (r, q always are)")
            ->delimiter(',');
    };

    struct Sub {
        Command cmd;
        const char* help;
    };
    const Sub subs[] = {
        {Command::Invariants, "Laplace invariants h, k"},
        {Command::PairInvariants, "Pair invariants r, q of (L, z)"},
        {Command::Gauge, "Gauge transform g^-1 L g and invariance of h, k"},
        {Command::CheckXInv, "X-invariant residual of --r"},
        {Command::CheckYInv, "Y-invariant residual of --q"},
        {Command::KernelFromR, "Kernel element from an X-invariant"},
        {Command::KernelFromQ, "Kernel element from a Y-invariant"},
        {Command::Corresponding, "Y-invariant paired with --r, or X-invariant paired with --q"},
        {Command::DarbouxX, "X-Darboux transformation generated by --r0"},
        {Command::DarbouxY, "Y-Darboux transformation generated by --q0"},
        {Command::Transport, "Transport an invariant through a Darboux transformation"},
        {Command::VerifyTransport, "Check by jet reduction that transport preserves invariance"},
        {Command::VerifyIntertwine, "Residual M1 L - L1 M of a given quadruple"},
        {Command::PropertyCheck, "Randomized invariant checks on oracle pairs"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(command_name(s.cmd), s.help);
        sub->callback([&spec, cmd = s.cmd] { spec.command = cmd; });
        common(sub, s.cmd != Command::PropertyCheck);
        switch (s.cmd) {
        case Command::PairInvariants:
            sub->add_option("--z", spec.z, "Kernel element, e.g. \"exp(-(x^2/2+x*y))\"")->required();
            break;
        case Command::Gauge:
            sub->add_option("--g", spec.g, "Gauge factor")->required();
            break;
        case Command::CheckXInv:
            sub->add_option("--r", spec.r, "Candidate X-invariant")->required();
            break;
        case Command::CheckYInv:
            sub->add_option("--q", spec.q, "Candidate Y-invariant")->required();
            break;
        case Command::KernelFromR:
        case Command::KernelFromQ:
        case Command::Corresponding:
            if (s.cmd != Command::KernelFromQ)
                sub->add_option("--r", spec.r, "X-invariant");
            if (s.cmd != Command::KernelFromR)
                sub->add_option("--q", spec.q, "Y-invariant");
            if (s.cmd == Command::KernelFromR)
                sub->get_option("--r")->required();
            if (s.cmd == Command::KernelFromQ)
                sub->get_option("--q")->required();
            sub->add_option("--base-point", spec.base_point, "Base point x0,y0 of the integrations")
                ->capture_default_str();
            break;
        case Command::DarbouxX:
            sub->add_option("--r0", spec.r0, "Generating X-invariant")->required();
            sub->add_flag("--unsafe", spec.unsafe, "Skip the invariant check");
            break;
        case Command::DarbouxY:
            sub->add_option("--q0", spec.q0, "Generating Y-invariant")->required();
            sub->add_flag("--unsafe", spec.unsafe, "Skip the invariant check");
            break;
        case Command::Transport:
            sub->add_option("--r0", spec.r0, "Generator of an X-transformation");
            sub->add_option("--q0", spec.q0, "Generator of a Y-transformation");
            sub->add_option("--r", spec.r, "X-invariant, concrete or the jet r");
            sub->add_option("--q", spec.q, "Y-invariant, concrete or the jet q");
            sub->add_option("--direction", spec.direction, "Inferred from the given flags when omitted")
                ->check(CLI::IsMember({"x-under-x", "y-under-y", "x-under-y", "y-under-x"}));
            sub->add_flag("--strict", spec.strict, "Reject y-under-x, which is derived by symmetry");
            break;
        case Command::VerifyTransport:
            sub->add_option("--r0", spec.r0, "Generator of an X-transformation");
            sub->add_option("--q0", spec.q0, "Generator of a Y-transformation");
            break;
        case Command::VerifyIntertwine:
            sub->add_option("--l1", spec.l1, "L1")->required();
            sub->add_option("--m", spec.m, "M")->required();
            sub->add_option("--m1", spec.m1, "M1")->required();
            break;
        case Command::PropertyCheck:
            sub->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
            sub->add_option("--count", spec.count, "Number of random pairs")->capture_default_str();
            break;
        default:
            break;
        }
        if (s.cmd == Command::Transport)
            sub->get_option("--op")->required(false);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }
    spec.format = format == "json" ? Format::Json : Format::Text;
    return run(spec, out, err);
}

} // namespace lapinv::cli
