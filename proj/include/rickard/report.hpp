#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rickard/check.hpp"
#include "rickard/tensor_model.hpp"

namespace rickard {

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Parameters of a suite run. Unset values fall back to per-suite defaults.
struct SuiteParams {
    std::optional<int> m, bigN, k, n, ell, deg;
    std::uint64_t seed = kDefaultSeed;
    std::size_t maxBasis = kDefaultMaxBasis;
};

struct SuiteReport {
    std::string suite;
    nlohmann::ordered_json params;  // resolved values, defaults filled in
    std::vector<CheckResult> checks;  // sorted by name

    bool passed() const { return allPassed(checks); }

    /// Keys in fixed order: suite, params, status, checks. elapsedMs per check
    /// only with `timing`, so reports without it are byte-reproducible.
    nlohmann::ordered_json toJson(bool timing = false) const;
    static SuiteReport fromJson(const nlohmann::ordered_json& j);
};

/// Names accepted by runSuite, "all" last.
const std::vector<std::string>& suiteNames();

/**
 * Runs one suite:
 *   tensor         relations and divided-power exactness on (C^m)^N   m=2 N=4
 *   braid          reflection inverse and braid relations            m=3 N=4
 *   nilhecke       nilHecke relations in n variables, degree <= deg   n=4 deg=8
 *   kernel-oracle  500 random words against matrices, confluence,
 *                  E^(N-2)F^(N-2) for N = 2..5                        N=5
 *   twists         P^n composite, T^-2l closed form, stabilization    n=1 ell=7 deg=12
 *   strata         component table checks for N <= N (k only if set)  N=10
 *   all            every suite above with its defaults, names prefixed
 * Throws InvalidArgument for an unknown suite or parameters out of range
 * and CapacityError past maxBasis. An IntegrityError raised inside a suite
 * becomes a failing check.
 */
SuiteReport runSuite(const std::string& name, const SuiteParams& params);

/// Normal form of `word` at `weight` in `window`, as text.
std::string simplifyCommand(const std::string& word, const std::string& weight, const std::string& window);

}  // namespace rickard
