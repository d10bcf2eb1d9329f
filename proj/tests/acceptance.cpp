#include <cstdlib>
#include <iostream>

#include "betaq/cli.hpp"
#include "betaq/suite.hpp"

int main(int argc, char** argv) {
    betaq::SuiteOptions opts;
    if (argc > 1) opts.k_max = std::atoi(argv[1]);
    opts.prec = betaq::default_precision();
    int failed = 0;
    auto results = betaq::run_suite(opts, [](const betaq::CheckResult& r) {
        std::cout << betaq::format_result(r) << std::endl;
    });
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
