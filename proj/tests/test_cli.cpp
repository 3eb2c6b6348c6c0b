#include "lapinv/cli.hpp"

#include <sstream>

#include "json.hpp"

#include "lapinv/lpdo.hpp"
#include "support.hpp"

using namespace lapinv;

namespace {

const char* const kExampleOp = "DxDy + (1 - x^2 - x*y)";

struct Result {
    int status;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "lapinv");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int status = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

nlohmann::json json_line(const Result& r) {
    REQUIRE(r.out.find('\n') == r.out.size() - 1);
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST_CASE("invariants of the worked example") {
    Result r = run({"invariants", "--op", kExampleOp});
    CHECK(r.status == 0);
    CHECK(r.out == "h = x^2+x*y-1\nk = x^2+x*y-1\n");

    auto j = json_line(run({"invariants", "--op", kExampleOp, "--format", "json"}));
    CHECK(parse_expr(j["h"].get<std::string>()) == parse_expr("-1+x^2+y*x"));
    CHECK(j["k"] == j["h"]);
}

TEST_CASE("darboux-x JSON output") {
    Result r = run({"darboux-x", "--op", kExampleOp, "--r0", "x+y", "--format", "json"});
    CHECK(r.status == 0);
    auto j = json_line(r);
    CHECK(j["L1"]["coeffs"]["0,1"] == "-1/(x+y)");
    CHECK(j["L1"]["coeffs"]["0,0"] == "-x^2-x*y");
    CHECK(j["residual_zero"] == true);
    CHECK(lpdo_from_json(j["L1"]) == parse_operator("DxDy - 1/(x+y)*Dy - x^2 - x*y"));
    CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("check-xinv exit codes") {
    Result fails = run({"check-xinv", "--op", "DxDy", "--r", "y"});
    CHECK(fails.status == 1);
    CHECK(fails.out.find("residual = -1\n") != std::string::npos);

    CHECK(run({"check-xinv", "--op", kExampleOp, "--r", "x+y"}).status == 0);
    CHECK(run({"check-yinv", "--op", kExampleOp, "--q", "x"}).status == 0);
}

TEST_CASE("bad input exits with 2") {
    Result syntax = run({"check-xinv", "--op", "DxDy", "--r", "y+"});
    CHECK(syntax.status == 2);
    CHECK(syntax.err.find("SyntaxError") != std::string::npos);
    CHECK(run({"invariants", "--op", "DxDx + 1"}).status == 2);
    CHECK(run({"invariants"}).status == 2);
    CHECK(run({"nonsense"}).status == 2);
    CHECK(run({"darboux-x", "--op", kExampleOp, "--r0", "x"}).status == 2);
    CHECK(run({"kernel-from-r", "--op", kExampleOp, "--r", "x+y", "--base-point", "a,b"}).status == 2);

    auto j = json_line(run({"invariants", "--op", "DxDy + w", "--format", "json"}));
    CHECK(j["error"] == "UnknownSymbol");
    CHECK(j["position"] == 7);
    CHECK(run({"invariants", "--op", "DxDy + w", "--functions", "w"}).status == 0);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("kernel and corresponding invariants") {
    Result z = run({"kernel-from-r", "--op", kExampleOp, "--r", "x+y"});
    CHECK(z.status == 0);
    CHECK(z.out == "z = exp(-1/2*x^2-x*y)\n");
    CHECK(run({"kernel-from-q", "--op", kExampleOp, "--q", "x"}).out == z.out);
    CHECK(run({"corresponding", "--op", kExampleOp, "--r", "x+y", "--base-point", "1/2,-3"}).out == "q = x\n");
    CHECK(run({"corresponding", "--op", kExampleOp, "--q", "x"}).out == "r = x+y\n");
    CHECK(run({"corresponding", "--op", kExampleOp}).status == 2);
    CHECK(run({"pair-invariants", "--op", kExampleOp, "--z", "exp(-(x^2/2+x*y))"}).out == "r = x+y\nq = x\n");
}

TEST_CASE("transport") {
    Result xx = run({"transport", "--r0", "x+y", "--r", "r", "--format", "json"});
    CHECK(xx.status == 0);
    auto j = json_line(xx);
    CHECK(j["direction"] == "x-under-x");
    CHECK(parse_expr(j["r1"].get<std::string>()) ==
          parse_expr("(-(x+y)*r^2 + (x^2+2*x*y+y^2-1)*r + r_x*x + r_x*y) / ((x+y)*(x+y-r))"));

    Result xy = run({"transport", "--op", kExampleOp, "--q0", "x", "--r", "r", "--q", "q"});
    CHECK(xy.status == 0);
    CHECK(xy.out.find("direction = x-under-y") != std::string::npos);

    CHECK(run({"transport", "--op", kExampleOp, "--r0", "x+y", "--r", "r", "--q", "q"}).status == 0);
    CHECK(run({"transport", "--op", kExampleOp, "--r0", "x+y", "--r", "r", "--q", "q", "--strict"}).status == 2);
    CHECK(run({"transport", "--r0", "x+y", "--r", "x+y"}).status == 2);
    CHECK(run({"transport", "--r0", "x+y"}).status == 2);
}

TEST_CASE("verification subcommands") {
    CHECK(run({"verify-transport", "--op", kExampleOp, "--r0", "x+y"}).status == 0);
    CHECK(run({"verify-transport", "--op", "DxDy", "--q0", "-1/(x^2+y)"}).status == 0);
    CHECK(run({"verify-intertwine", "--op", kExampleOp, "--l1", "DxDy - 1/(x+y)*Dy - x^2 - x*y", "--m", "Dx + x + y",
               "--m1", "Dx + x + y - 1/(x+y)"})
              .status == 0);
    Result bad = run({"verify-intertwine", "--op", kExampleOp, "--l1", "DxDy - x^2 - x*y", "--m", "Dx + x + y", "--m1",
                      "Dx + x + y"});
    CHECK(bad.status == 1);
    CHECK(bad.out.find("holds = false") != std::string::npos);
    CHECK(run({"darboux-y", "--op", kExampleOp, "--q0", "x"}).status == 0);
    CHECK(run({"darboux-x", "--op", kExampleOp, "--r0", "x", "--unsafe"}).status == 1);
    CHECK(run({"gauge", "--op", "DxDy + x*Dx", "--g", "x*y+1"}).status == 0);
}

TEST_CASE("property-check is reproducible by seed") {
    Result a = run({"property-check", "--seed", "11", "--count", "20", "--format", "json"});
    Result b = run({"property-check", "--seed", "11", "--count", "20", "--format", "json"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    auto j = json_line(a);
    CHECK(j["instances"] == 20);
    CHECK(j["failures"].empty());
}

TEST_CASE("printed expressions re-parse") {
    Result r = run({"darboux-x", "--op", kExampleOp, "--r0", "x+y"});
    std::istringstream lines(r.out);
    std::string line;
    int ops = 0;
    while (std::getline(lines, line)) {
        auto eq = line.find(" = ");
        std::string key = line.substr(0, eq), value = line.substr(eq + 3);
        if (key == "L1" || key == "M" || key == "M1") {
            CHECK(to_string(parse_operator(value)) == value);
            ++ops;
        } else if (key == "h1" || key == "k1") {
            CHECK(to_string(parse_expr(value)) == value);
        }
    }
    CHECK(ops == 3);
}
