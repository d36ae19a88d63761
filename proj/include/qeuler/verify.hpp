#ifndef QEULER_VERIFY_HPP
#define QEULER_VERIFY_HPP

#include <array>
#include <string>
#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

struct CaseResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;
    bool pass = true;
    double max_residual = 0.0;
    double seconds = 0.0;
    long long failed = 0;
};

struct SuiteOptions {
    std::vector<Rat> qs; // overrides the exact-grid q values when nonempty
    double tol = 0.0;    // overrides the float tolerance when positive
};

// Suites: two-path, reductions, symmetry, distribution, recurrence,
// series, abel, padic, q-limit, interpolation, mellin. Each runs a
// pinned grid of identity checks with its tolerances fixed in code.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

// Euler polynomial values E_n(0) for n = 0..4: the q -> 1 limits.
const std::array<Rat, 5>& classical_euler_at_zero();

} // namespace qeuler

#endif
