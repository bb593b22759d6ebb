#pragma once

#include "conjclass/io.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace conjclass::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // not conjugate, or verification failed
    kParse = 2,
    kSynthUnsupported = 3,
    kUnsupportedDimension = 4,
    kMismatch = 5,
};

struct Result {
    io::Json document;
    int exit_code = kOk;
};

/// Tolerance used when none is given: CONJCLASS_TOL if set and valid, else 1e-9.
double default_tolerance();

struct OrbitRequest {
    std::size_t steps = 0;
    /// Realified start point; the origin when empty.
    std::vector<Rational> start;
};

struct CompareOptions {
    bool synthesize = false;
    bool verify = false;  // implies synthesize
    VerificationSpec spec{10000, 10, default_tolerance()};
};

Result cmd_classify(const io::Json& map, const std::optional<OrbitRequest>& orbit = std::nullopt);
Result cmd_compare(const io::Json& f, const io::Json& g, const CompareOptions& options = {});
Result cmd_verify(const io::Json& f, const io::Json& g, const io::Json& h, const VerificationSpec& spec);

/// Error document {"v": 1, "error": {"code", "message"}} with the matching exit code.
Result failure(const Error& e);

/// Full command line: subcommands classify, compare, verify. Reads documents from
/// files named on the command line or from `in`, writes one JSON line per result.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace conjclass::cli
