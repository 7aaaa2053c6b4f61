#pragma once

#include <string>
#include <vector>

namespace sixv {

// Outcome of one named identity check.  `params` states the instance
// (sizes, sampled values); `detail` is empty on success and carries the
// first counterexample or the caught error text on failure.
struct CheckResult {
    std::string id;
    std::string params;
    bool pass = false;
    double ms = 0.0;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_passed = true;
};

// Search-depth knobs shared by the suites.  The defaults match the full
// verification envelope; smaller values shrink runs proportionally.
struct SuiteOptions {
    int max_sites = 6;      // largest chain length for row contractions
    int max_particles = 3;  // largest particle number for row contractions
    int asm_cap = 4;        // largest matrix order for the square-lattice suite
};

// The available suite names, in canonical order: intertwiners,
// matrix-elements, wavefunction, scalar, intermediate, dwbpf, cauchy, asm.
const std::vector<std::string>& suite_names();

// Runs one suite; StructuralError on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

// Runs every suite in canonical order.
std::vector<SuiteResult> run_all(const SuiteOptions& opts);

} // namespace sixv
