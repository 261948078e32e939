#include "rickard/report.hpp"

#include <algorithm>
#include <functional>

#include "rickard/complex_shape.hpp"
#include "rickard/errors.hpp"
#include "rickard/nilhecke.hpp"
#include "rickard/reflection.hpp"
#include "rickard/strata.hpp"

namespace rickard {

namespace {

using nlohmann::ordered_json;

constexpr int kNilHeckeSamples = 50;
constexpr int kOracleSamples = 500;

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
    for (auto& c : more) out.push_back(std::move(c));
}

SuiteReport runOne(const std::string& name, const SuiteParams& p) {
    SuiteReport r;
    r.suite = name;
    ordered_json& params = r.params;
    std::function<void()> body;
    if (name == "tensor" || name == "braid") {
        const int m = p.m.value_or(name == "tensor" ? 2 : 3);
        const int n = p.bigN.value_or(4);
        params["m"] = m;
        params["N"] = n;
        params["max-basis"] = p.maxBasis;
        body = [&r, name, m, n, maxBasis = p.maxBasis] {
            const TensorModel model = buildModel(m, n, maxBasis);
            if (name == "tensor") {
                append(r.checks, relationSuite(model));
                append(r.checks, dividedPowerExactness(model, std::min(n, 5)));
            } else {
                append(r.checks, braidSuite(model));
            }
        };
    } else if (name == "nilhecke") {
        const int n = p.n.value_or(4);
        const int deg = p.deg.value_or(8);
        if (n < 1 || n > 6 || deg < 0 || deg > 12) throw InvalidArgument("nilhecke: need 1 <= n <= 6, 0 <= deg <= 12");
        params["n"] = n;
        params["deg"] = deg;
        params["samples"] = kNilHeckeSamples;
        params["seed"] = p.seed;
        body = [&r, n, deg, seed = p.seed] { r.checks = nilHeckeSuite(n, deg, kNilHeckeSamples, seed); };
    } else if (name == "kernel-oracle") {
        const int n = p.bigN.value_or(5);
        if (n < 1 || n > 8) throw InvalidArgument("kernel-oracle: need 1 <= N <= 8");
        params["N"] = n;
        params["samples"] = kOracleSamples;
        params["seed"] = p.seed;
        body = [&r, n, seed = p.seed] {
            r.checks = rewriteOracleSuite(n, kOracleSamples, seed);
            for (int e = 2; e <= n; ++e) append(r.checks, dividedSquareCheck(e));
        };
    } else if (name == "twists") {
        const int n = p.n.value_or(3);
        const int ell = p.ell.value_or(7);
        const int deg = p.deg.value_or(12);
        if (n < 1 || n > 5 || ell < 2 || ell > 12 || deg < 0 || deg > 2 * ell) {
            throw InvalidArgument("twists: need 1 <= n <= 5, 2 <= ell <= 12, 0 <= deg <= 2 ell");
        }
        params["n"] = n;
        params["ell"] = ell;
        params["deg"] = deg;
        body = [&r, n, ell, deg] { r.checks = twistSuite(n, ell, deg); };
    } else if (name == "strata") {
        const int n = p.bigN.value_or(10);
        const int k = p.k.value_or(0);
        if (n < 2 || n > 30 || k < 0 || 2 * k > n) throw InvalidArgument("strata: need 2 <= N <= 30, 2k <= N");
        params["N"] = n;
        if (k > 0) params["k"] = k;
        body = [&r, n, k] { r.checks = strataSuite(n, k); };
    } else {
        throw InvalidArgument("unknown suite '" + name + "'");
    }
    try {
        body();
    } catch (const IntegrityError& e) {
        r.checks.push_back({"integrity", false, e.what(), 0});
    }
    std::stable_sort(r.checks.begin(), r.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return r;
}

}  // namespace

ordered_json SuiteReport::toJson(bool timing) const {
    ordered_json j;
    j["suite"] = suite;
    j["params"] = params;
    j["status"] = passed() ? "pass" : "fail";
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = c.passed ? "pass" : "fail";
        cj["detail"] = c.detail;
        if (timing) cj["elapsedMs"] = c.elapsedMs;
        j["checks"].push_back(std::move(cj));
    }
    return j;
}

SuiteReport SuiteReport::fromJson(const ordered_json& j) {
    SuiteReport r;
    try {
        r.suite = j.at("suite").get<std::string>();
        r.params = j.at("params");
        for (const auto& cj : j.at("checks")) {
            CheckResult c;
            c.name = cj.at("name").get<std::string>();
            const auto status = cj.at("status").get<std::string>();
            if (status != "pass" && status != "fail") throw InvalidArgument("report: bad check status '" + status + "'");
            c.passed = status == "pass";
            c.detail = cj.at("detail").get<std::string>();
            c.elapsedMs = cj.value("elapsedMs", 0.0);
            r.checks.push_back(std::move(c));
        }
        if (j.at("status").get<std::string>() != (r.passed() ? "pass" : "fail")) {
            throw InvalidArgument("report: overall status disagrees with the checks");
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("report: ") + e.what());
    }
    return r;
}

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names{"tensor", "braid", "nilhecke", "kernel-oracle", "twists", "strata", "all"};
    return names;
}

SuiteReport runSuite(const std::string& name, const SuiteParams& params) {
    if (name != "all") return runOne(name, params);
    SuiteParams defaults;
    defaults.seed = params.seed;
    defaults.maxBasis = params.maxBasis;
    SuiteReport all;
    all.suite = "all";
    all.params["seed"] = params.seed;
    for (const auto& s : suiteNames()) {
        if (s == "all") continue;
        auto part = runOne(s, defaults);
        all.params[s] = part.params;
        for (auto& c : part.checks) {
            c.name = s + ": " + c.name;
            all.checks.push_back(std::move(c));
        }
    }
    std::stable_sort(all.checks.begin(), all.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return all;
}

std::string simplifyCommand(const std::string& word, const std::string& weight, const std::string& window) {
    const KernelWord w = parseWord(word, weight);
    return normalForm(w, Window::parse(window)).toString();
}

}  // namespace rickard
