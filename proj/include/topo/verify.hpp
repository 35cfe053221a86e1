#pragma once

#include "topo/fixtures.hpp"

#include <string>
#include <vector>

namespace topo {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // first failure, or a short summary
};

// The full acceptance battery, one result per criterion. Integer claims run
// over wide ranges (2..50 / 2..12 as stated per check); numeric claims use
// the pinned tolerances.
std::vector<CheckResult> run_all_checks(const FixtureProvider &fixtures);

// The exact (integer) criteria specialized to a single n.
std::vector<CheckResult> run_checks_for_n(const FixtureProvider &fixtures, const Int &n);

// The floating-point criteria (independent of n).
std::vector<CheckResult> run_numeric_checks();

}  // namespace topo
