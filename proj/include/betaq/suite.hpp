#pragma once

#include <functional>
#include <string>
#include <vector>

namespace betaq {

struct CheckResult {
    std::string id;       // "1" .. "12", with a "b" suffix for companion checks
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteOptions {
    int k_max = 6;
    long prec = 256;
    unsigned long long seed = 20240611;
};

/// Runs the end-to-end checks in order, calling on_result after each one.
/// Criteria 7, 8, 9 and 11 are evaluated exactly as stated (2^l lattice
/// weights, M(l, r) as displayed, -1/E_{2k} main term for odd k); each is
/// followed by a "b" check using the corrected quantity.
std::vector<CheckResult> run_suite(const SuiteOptions& opts,
                                   const std::function<void(const CheckResult&)>& on_result = {});

std::string format_result(const CheckResult& r);

} // namespace betaq
