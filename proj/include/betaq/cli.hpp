#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "betaq/qseries.hpp"

namespace betaq {

enum class Command { expand, eisenstein, verify, decompose, cm, limits, count, asympt, suite };
enum class OutputFormat { json, csv, text };

struct RunConfig {
    Command command = Command::suite;
    int k = 1;
    int r = 1;
    long trunc = kDefaultTruncation;
    long prec = 256;
    long nmax = 100;
    long n = 0;
    OutputFormat output = OutputFormat::json;
    std::optional<std::string> identity;   // verify: ramanujan | hou-sun | k3 | theorem2
    std::string quotient;                  // expand: "4^6*8^4/2^4 @8"
    int twist = 1;                         // eisenstein: 1 -> psi trivial, 2 -> psi = chi_2
    long scale = 0;                        // eisenstein: tau -> scale * tau; 0 means the modulus of psi
    std::string target = "fk-minus-hk";    // decompose: fk-minus-hk | hk-minus-fk | fk | hk
    int k_max = 6;                         // suite
};

/// BETAQ_PREC if set (must be an integer >= 64), otherwise 256.
long default_precision();

/// Throws UsageError when the configuration is invalid.
void validate(const RunConfig& cfg);

/// Dispatches one command.  Returns 0 when every check passed, 1 when a
/// check failed or the computation raised, 2 on a usage error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace betaq
