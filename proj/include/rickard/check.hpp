#pragma once

#include <string>
#include <vector>

namespace rickard {

/// Outcome of one verified identity. `detail` carries the first
/// counterexample on failure and a short summary on success.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double elapsedMs = 0.0;
};

inline bool allPassed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

}  // namespace rickard
