#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lapinv::cli {

enum class Command {
    Invariants,
    PairInvariants,
    Gauge,
    CheckXInv,
    CheckYInv,
    KernelFromR,
    KernelFromQ,
    Corresponding,
    DarbouxX,
    DarbouxY,
    Transport,
    VerifyTransport,
    VerifyIntertwine,
    PropertyCheck,
};

enum class Format { Text, Json };

/// Everything one invocation needs; unset optionals are absent flags.
/// Expressions are kept as text and parsed by run().
struct JobSpec {
    Command command = Command::Invariants;
    std::string op;
    std::optional<std::string> r0, q0, z, g, r, q;
    // verify-intertwine
    std::optional<std::string> l1, m, m1;
    // transport: x-under-x, y-under-y, x-under-y, y-under-x; inferred when empty
    std::string direction;
    std::vector<std::string> functions;
    Format format = Format::Text;
    std::string base_point = "0,0";
    bool strict = false;
    bool unsafe = false;
    std::uint64_t seed = 20240601;
    int count = 200;
};

/// Exit status: 0 success / identity holds, 1 identity fails, 2 bad input.
inline constexpr int kOk = 0;
inline constexpr int kIdentityFails = 1;
inline constexpr int kBadInput = 2;

int run(const JobSpec& spec, std::ostream& out, std::ostream& err);
/// Parses argv (argv[0] is the program name) and runs the job.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lapinv::cli
