#include "rickard/strata.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "rickard/errors.hpp"

namespace rickard {

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

void requireShape(int k, int n, const char* who) {
    if (k < 1 || 2 * k > n) {
        throw InvalidArgument(std::string(who) + ": need 1 <= k and 2k <= N, got k=" + std::to_string(k) +
                              ", N=" + std::to_string(n));
    }
}

void requireStratum(int k, int s, const char* who) {
    if (s < 0 || s > k) {
        throw InvalidArgument(std::string(who) + ": stratum " + std::to_string(s) + " outside 0.." +
                              std::to_string(k));
    }
}

std::string pad(int n) { return (n < 10 ? "0" : "") + std::to_string(n); }

}  // namespace

int nilpotentOrbitDim(const std::vector<int>& partition) {
    int n = 0;
    for (int part : partition) {
        if (part < 0) throw InvalidArgument("nilpotentOrbitDim: negative part");
        n += part;
    }
    const int longest = partition.empty() ? 0 : *std::max_element(partition.begin(), partition.end());
    int sumSquares = 0;
    for (int c = 1; c <= longest; ++c) {
        const auto column = static_cast<int>(std::count_if(partition.begin(), partition.end(), [c](int p) { return p >= c; }));
        sumSquares += column * column;
    }
    return n * n - sumSquares;
}

StrataDescriptor componentTable(int k, int n) {
    requireShape(k, n, "componentTable");
    StrataDescriptor d{k, n, {}};
    for (int s = 0; s <= k; ++s) {
        const int r = k - s;
        std::vector<int> jordan(static_cast<std::size_t>(r), 2);
        jordan.resize(static_cast<std::size_t>(n - r), 1);
        StratumRow row;
        row.s = s;
        row.baseDim = stratumBaseDim(k, n, s);
        if (row.baseDim != nilpotentOrbitDim(jordan)) {
            throw IntegrityError("componentTable: orbit dimension mismatch at rank " + std::to_string(r));
        }
        row.fiberDim = stratumFiberDim(k, n, s);
        row.totalDim = row.baseDim + row.fiberDim;
        row.chi = fixedPointCount(k, n, s, false);
        row.chiStrict = fixedPointCount(k, n, s, true);
        d.rows.push_back(row);
    }
    if (d.rows.front().baseDim != 2 * k * (n - k)) {
        throw IntegrityError("componentTable: s = 0 base is not birational to T*G(k,N)");
    }
    return d;
}

std::string toString(Incidence incidence) {
    switch (incidence) {
        case Incidence::Self: return "self";
        case Incidence::Divisor: return "divisor";
        case Incidence::Deeper: return "deeper";
    }
    return "?";
}

Incidence incidence(int k, int n, int s, int sPrime) {
    requireShape(k, n, "incidence");
    requireStratum(k, s, "incidence");
    requireStratum(k, sPrime, "incidence");
    const int gap = std::abs(s - sPrime);
    if (gap == 0) return Incidence::Self;
    return gap == 1 ? Incidence::Divisor : Incidence::Deeper;
}

bool openLocus(int dimKer, int dimIntersect, int k, int n) {
    requireShape(k, n, "openLocus");
    if (dimIntersect < 0 || dimIntersect > k) throw InvalidArgument("openLocus: dim(V n V') outside 0..k");
    if (dimKer < n - k || dimKer > n) throw InvalidArgument("openLocus: dim(ker X) outside N-k..N");
    return dimKer + dimIntersect <= n + 1;
}

std::int64_t fixedPointCount(int k, int n, int s, bool strict) {
    requireShape(k, n, "fixedPointCount");
    requireStratum(k, s, "fixedPointCount");
    // S' meets S in t points: C(k,t) ways inside S, C(N-k,t) ways to leave out N-k-t of the rest
    std::int64_t total = 0;
    for (int t = k - s; t <= (strict ? k - s : k); ++t) total += binomial(k, t) * binomial(n - k, t);
    return binomial(n, k) * total;
}

IntPoly equidimensionalityDefect() {
    const IntPoly k = IntPoly::variable(1), n = IntPoly::variable(2), s = IntPoly::variable(3);
    return stratumBaseDim(k, n, s) + stratumFiberDim(k, n, s) - IntPoly(2) * k * (n - k);
}

std::vector<CheckResult> strataSuite(int maxN, int onlyK) {
    if (maxN < 2 || maxN > 30) throw InvalidArgument("strataSuite: need 2 <= N <= 30");
    if (onlyK < 0 || 2 * onlyK > maxN) throw InvalidArgument("strataSuite: need 2k <= N");
    std::vector<CheckResult> out;
    auto start = std::chrono::steady_clock::now();
    const IntPoly defect = equidimensionalityDefect();
    out.push_back({"symbolic identity", defect.isZero(), "baseDim + fiberDim - 2k(N-k) = " + defect.toString(), 0});
    for (int n = 2; n <= maxN; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            if (onlyK > 0 && k != onlyK) continue;
            start = std::chrono::steady_clock::now();
            const auto d = componentTable(k, n);
            const std::string tag = "N=" + pad(n) + " k=" + std::to_string(k);
            const int expected = 2 * k * (n - k);
            std::string bad;
            std::int64_t partition = 0;
            std::int64_t previous = 0;
            bool monotone = true;
            for (const auto& row : d.rows) {
                if (row.totalDim != expected && bad.empty()) bad = "s=" + std::to_string(row.s) + " has dimension " + std::to_string(row.totalDim);
                partition += row.chiStrict;
                monotone = monotone && row.chi >= previous;
                previous = row.chi;
            }
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            out.push_back({tag + " components", static_cast<int>(d.rows.size()) == k + 1,
                           std::to_string(d.rows.size()) + " components", ms});
            out.push_back({tag + " equidimensional", bad.empty(),
                           bad.empty() ? "all of dimension " + std::to_string(expected) : bad, 0});
            const std::int64_t square = binomial(n, k) * binomial(n, k);
            out.push_back({tag + " fixed points", partition == square && monotone && d.rows.back().chi == square,
                           "strict counts sum to " + std::to_string(partition) + ", C(N,k)^2 = " + std::to_string(square),
                           0});
        }
    }
    return out;
}

}  // namespace rickard
