#pragma once

#include <string>
#include <vector>

namespace chieb {

struct CheckResult {
    std::string name;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct ValidationOptions {
    std::string only;         ///< run a single family by name (empty = all)
    bool inject_fault = false; ///< test hook: perturb one reference value
};

/// Cross-checks of the production sums against the independent oracle
/// paths. Families: "ho-oracle", "hydrogen-oracle", "radial-gordon",
/// "gaunt-angular", "units".
std::vector<CheckResult> run_validation(const ValidationOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace chieb
