#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "filtcat/instance.hpp"

namespace filtcat {

struct VerifyConfig {
    std::string suite;
    size_t trials = 200;
    uint64_t seed = 42;
    size_t max_poset = 6;   // elements
    size_t max_dim = 3;     // per-element dimension budget
    size_t max_bound = 3;   // monoid window
};

struct TrialFailure {
    size_t trial;
    std::string message;
};

// passed counts trials whose every check held exactly; failures are sorted
// by trial index so concurrent execution cannot change the report.
struct VerifyReport {
    std::string suite;
    size_t passed = 0;
    size_t total = 0;
    std::vector<TrialFailure> failures;

    bool ok() const { return passed == total && total > 0; }
};

// Suite ids in display order. "main1" and "main2" are accepted as aliases
// of rees-resolution and module-resolution.
const std::vector<std::string>& verify_suites();

// Trial i draws from seed + i, so trials are independent of execution order
// and of each other.
VerifyReport run_verify(const VerifyConfig& cfg);

}  // namespace filtcat
