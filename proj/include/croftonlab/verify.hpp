#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace croftonlab {

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Suites: "core", "hilbert", "perimeter", "measures", "all".
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

} // namespace croftonlab
