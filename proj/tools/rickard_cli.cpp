// rickard_cli: verify suites, simplify kernel words, print strata tables.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rickard/errors.hpp"
#include "rickard/report.hpp"
#include "rickard/strata.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void printReport(const rickard::SuiteReport& r, bool timing) {
    std::size_t width = 0;
    int passed = 0;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    for (const auto& c : r.checks) {
        passed += c.passed ? 1 : 0;
        std::printf("%s  %-*s  %s", c.passed ? "PASS" : "FAIL", static_cast<int>(width), c.name.c_str(), c.detail.c_str());
        if (timing) std::printf("  (%.1f ms)", c.elapsedMs);
        std::printf("\n");
    }
    std::printf("%s: %s, %d/%zu checks pass\n", r.suite.c_str(), r.passed() ? "pass" : "fail", passed, r.checks.size());
}

int strataTable(int k, int n, bool json) {
    const auto d = rickard::componentTable(k, n);
    bool ok = d.rows.size() == static_cast<std::size_t>(k + 1);
    for (const auto& row : d.rows) ok = ok && row.totalDim == 2 * k * (n - k);
    if (json) {
        nlohmann::ordered_json j;
        j["k"] = k;
        j["N"] = n;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : d.rows) {
            j["rows"].push_back({{"s", row.s},
                                 {"baseDim", row.baseDim},
                                 {"fiberDim", row.fiberDim},
                                 {"totalDim", row.totalDim},
                                 {"chi", row.chi},
                                 {"chiStrict", row.chiStrict}});
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::printf("Z(%d,%d): %zu components, expected dimension %d\n", k, n, d.rows.size(), 2 * k * (n - k));
        std::printf("%3s %8s %9s %9s %10s %10s\n", "s", "baseDim", "fiberDim", "totalDim", "chi", "chiStrict");
        for (const auto& row : d.rows) {
            std::printf("%3d %8d %9d %9d %10lld %10lld\n", row.s, row.baseDim, row.fiberDim, row.totalDim,
                        static_cast<long long>(row.chi), static_cast<long long>(row.chiStrict));
        }
    }
    return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Rickard complexes, braid group actions and flop strata"};
    app.set_config("--config", "", "key=value file; keys for a command go under [verify], [simplify] or [strata]");
    app.require_subcommand(1);
    app.fallthrough();

    std::string suite;
    rickard::SuiteParams params;
    std::optional<int> m, bigN, k, n, ell, deg;
    std::size_t maxBasis = rickard::kDefaultMaxBasis;
    bool json = false;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "tensor, braid, nilhecke, kernel-oracle, twists, strata or all")
        ->required()
        ->check(CLI::IsMember(rickard::suiteNames()));
    verify->add_option("--m", m, "rank, the model is (C^m)^N");
    verify->add_option("--N", bigN, "tensor length / window bound");
    verify->add_option("--k", k, "strata: only this k");
    verify->add_option("--n", n, "nilhecke variables / P^n twist up to n");
    verify->add_option("--ell", ell, "twists: largest power l of T^-2");
    verify->add_option("--deg", deg, "nilhecke monomial degree / twist degrees");
    verify->add_option("--seed", params.seed, "seed for randomized checks")->capture_default_str();
    verify->add_option("--max-basis", maxBasis, "largest m^N allowed")->capture_default_str();
    verify->add_flag("--json", json, "print the report as JSON");
    verify->add_flag("--timing", timing, "include elapsed milliseconds per check");

    std::string word, weight, window = "none";
    auto* simplify = app.add_subcommand("simplify", "normal form of a kernel word");
    simplify->add_option("--word", word, "e.g. \"F2^(3) E1 E1\"")->required();
    simplify->add_option("--weight", weight, "integer for sl2, \"(2,1,0)\" otherwise")->required();
    simplify->add_option("--window", window, "none, M, [-M,M] or {-M,...,M}")->capture_default_str();

    int strataK = 0, strataN = 0;
    bool strataJson = false;
    auto* strata = app.add_subcommand("strata", "component table of Z(k,N)");
    strata->add_option("--k", strataK)->required();
    strata->add_option("--N", strataN)->required();
    strata->add_flag("--json", strataJson);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) {
            params.m = m;
            params.bigN = bigN;
            params.k = k;
            params.n = n;
            params.ell = ell;
            params.deg = deg;
            params.maxBasis = maxBasis;
            const auto report = rickard::runSuite(suite, params);
            if (json) {
                std::cout << report.toJson(timing).dump(2) << '\n';
            } else {
                printReport(report, timing);
            }
            return report.passed() ? 0 : kExitFail;
        }
        if (*simplify) {
            std::cout << rickard::simplifyCommand(word, weight, window) << '\n';
            return 0;
        }
        return strataTable(strataK, strataN, strataJson);
    } catch (const rickard::UnsupportedRewrite& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUsage;
    } catch (const rickard::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const rickard::CapacityError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
}
